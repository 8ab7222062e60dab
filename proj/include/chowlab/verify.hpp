#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chowlab/bijections.hpp"
#include "chowlab/chow.hpp"
#include "chowlab/codes.hpp"
#include "chowlab/complex.hpp"
#include "chowlab/fans.hpp"
#include "chowlab/io.hpp"
#include "chowlab/lattice.hpp"
#include "chowlab/matroid.hpp"
#include "chowlab/permutation.hpp"
#include "chowlab/symfunc.hpp"

namespace chowlab {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

/// Outcome of one verification suite.
struct RunReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  int exit_status() const { return passed() ? 0 : 1; }

  void add(std::string name, bool pass, std::string expected = "true", std::string actual = "") {
    if (actual.empty()) actual = pass ? expected : "false";
    checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
  }

  template <class T>
  void expect_eq(std::string name, const T& expected, const T& actual) {
    checks.push_back({std::move(name), expected == actual, show(expected), show(actual)});
  }

  void merge(const RunReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

  template <class T>
  static std::string show(const T& v) {
    if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else if constexpr (std::is_arithmetic_v<T>) {
      return std::to_string(v);
    } else if constexpr (requires { v.to_string(); }) {
      return v.to_string();
    } else {
      std::string s = "(";
      bool first = true;
      for (const auto& x : v) {
        if (!first) s += ",";
        s += show(x);
        first = false;
      }
      return s + ")";
    }
  }
};

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

/// B_1..B_k for k = min(n, 4), then U_{3,2}, U_{4,2}, U_{4,3} as far as n allows.
inline std::vector<NamedMatroid> standard_matroids(int n) {
  std::vector<NamedMatroid> out;
  for (int k = 1; k <= std::min(n, 4); ++k) out.push_back({"B_" + std::to_string(k), make_boolean(k)});
  if (n >= 3) out.push_back({"U_{3,2}", make_uniform(3, 2)});
  if (n >= 4) {
    out.push_back({"U_{4,2}", make_uniform(4, 2)});
    out.push_back({"U_{4,3}", make_uniform(4, 3)});
  }
  return out;
}

/// Orders chains by comparing flats first by size, then lexicographically.
/// This is the row order of the usual printed correspondence tables.
inline bool table_order(const FYMonomial& a, const FYMonomial& b) {
  auto key = [](Subset s) { return std::pair(s.size(), s); };
  const std::size_t k = std::min(a.chain.size(), b.chain.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a.chain[i] != b.chain[i]) return key(a.chain[i]) < key(b.chain[i]);
  }
  if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size();
  return a.exps < b.exps;
}

// --- reference data -----------------------------------------------------------

inline const std::vector<std::string>& reference_c3() {
  static const std::vector<std::string> v{"000", "011*", "101*", "11*0", "11*1", "111*"};
  return v;
}

/// (monomial, code) rows of the degree-2 correspondence for n = 4.
inline const std::vector<std::pair<std::string, std::string>>& reference_b4_degree2() {
  static const std::vector<std::pair<std::string, std::string>> v{
      {"x_{12}x_{1234}", "11*22*"}, {"x_{13}x_{1234}", "121*2*"}, {"x_{14}x_{1234}", "122*1*"},
      {"x_{23}x_{1234}", "211*2*"}, {"x_{24}x_{1234}", "212*1*"}, {"x_{34}x_{1234}", "22*11*"},
      {"x_{123}^2", "111*0"},       {"x_{124}^2", "1101*"},       {"x_{134}^2", "1011*"},
      {"x_{234}^2", "0111*"},       {"x_{1234}^2", "111*1"}};
  return v;
}

/// Extended codes of length 3 by index, as listed for the n = 3 example.
inline const std::map<int, std::vector<std::string>>& reference_ext_c3() {
  static const std::map<int, std::vector<std::string>> v{
      {-1, {"zzz"}},
      {0, {"000", "00z", "0z0", "0zz", "z00", "z0z", "zz0"}},
      {1, {"011*", "101*", "11*0", "11*1", "11*z", "1z1*", "z11*"}},
      {2, {"111*"}}};
  return v;
}

/// The two worked augmented examples on n = 9: (monomial, extended code).
inline const std::vector<std::pair<std::string, std::string>>& reference_aug_examples() {
  static const std::vector<std::pair<std::string, std::string>> v{
      {"x_{14}x_{1247}x_{1245679}^2", "01z0221*z2*"},
      {"x_{14}^2x_{1247}x_{1245679}^2", "12z1*332*z3*"}};
  return v;
}

/// Maximal cones of the augmented Bergman fan of B_2, as (I, flag).
inline std::vector<CompatiblePair> reference_b2_maximal_cones() {
  return {CompatiblePair{Subset{1, 2}, {}}, CompatiblePair{Subset{1}, {Subset{1}}},
          CompatiblePair{Subset{2}, {Subset{2}}}, CompatiblePair{Subset{}, {Subset{}, Subset{1}}},
          CompatiblePair{Subset{}, {Subset{}, Subset{2}}}};
}

// --- suites ---------------------------------------------------------------------

/// Which of the two code families (and bijections) a suite covers.
enum class Family { Plain, Extended, Both };

namespace detail {

template <bool E>
std::vector<std::int64_t> graded_counts(const std::map<int, std::vector<BasicCode<E>>>& by_index, int shift) {
  std::vector<std::int64_t> out;
  for (const auto& [j, v] : by_index) {
    const std::size_t t = static_cast<std::size_t>(j + shift);
    if (out.size() <= t) out.resize(t + 1, 0);
    out[t] = static_cast<std::int64_t>(v.size());
  }
  return out;
}

template <class T>
bool palindromic(const std::vector<T>& v) {
  return std::equal(v.begin(), v.end(), v.rbegin());
}

}  // namespace detail

/// Code and extended-code counts against Eulerian and binomial Eulerian
/// polynomials for lengths 1..n, plus the n = 3 listings.
inline RunReport verify_codes(int n, Family which = Family::Both) {
  RunReport r{"codes", {}};
  const bool plain = which != Family::Extended;
  const bool extended = which != Family::Plain;
  for (int k = 1; k <= n; ++k) {
    bool valid = true;
    if (plain) {
      const auto codes = enumerate_codes(k);
      r.expect_eq("codes n=" + std::to_string(k) + " counts = A_n", eulerian(k), detail::graded_counts(codes, 0));
      for (const auto& [j, v] : codes) {
        for (const Code& c : v) valid = valid && is_valid(c) && code_index(c) == j;
      }
    }
    if (extended) {
      const auto ext = enumerate_extended_codes(k);
      r.expect_eq("extended n=" + std::to_string(k) + " counts = binomial A_n", binomial_eulerian(k),
                  detail::graded_counts(ext, 1));
      for (const auto& [j, v] : ext) {
        for (const ExtendedCode& c : v) valid = valid && is_valid(c) && code_index(c) == j;
      }
    }
    r.add("codes n=" + std::to_string(k) + " valid with matching index", valid);
  }
  if (n >= 3 && plain) {
    std::vector<std::string> listed;
    for (const auto& [j, v] : enumerate_codes(3)) {
      for (const Code& c : v) listed.push_back(to_text(c));
    }
    r.expect_eq("C_3 listing", reference_c3(), listed);
  }
  if (n >= 3 && extended) {
    std::map<int, std::vector<std::string>> ext;
    for (const auto& [j, v] : enumerate_extended_codes(3)) {
      for (const ExtendedCode& c : v) ext[j].push_back(to_text(c));
    }
    for (auto& [j, v] : ext) std::sort(v.begin(), v.end());
    bool same = ext == reference_ext_c3();
    r.add("extended C_3 listing", same);
  }
  return r;
}

/// Basis enumeration checks: membership, palindromic counts for B_k, and the
/// generic lattice basis agreeing with the matroid-specific bases.
inline RunReport verify_fy(const std::vector<NamedMatroid>& ms, int boolean_up_to) {
  RunReport r{"fy", {}};
  for (int k = 1; k <= boolean_up_to; ++k) {
    const Matroid b = make_boolean(k);
    const auto fy = fy_basis_matroid(b);
    const auto aug = aug_fy_basis(b);
    const std::string tag = "B_" + std::to_string(k);
    r.expect_eq(tag + " FY counts = A_n", eulerian(k), hilbert_series_fy(fy));
    r.expect_eq(tag + " aug FY counts = binomial A_n", binomial_eulerian(k), hilbert_series_fy(aug));
    r.add(tag + " FY counts palindromic", detail::palindromic(hilbert_series_fy(fy)));
    r.add(tag + " aug FY counts palindromic", detail::palindromic(hilbert_series_fy(aug)));
  }
  for (const NamedMatroid& nm : ms) {
    const Matroid& m = nm.matroid;
    const auto fy = fy_basis_matroid(m);
    const auto aug = aug_fy_basis(m);
    bool members = true;
    for (const auto& [d, v] : fy.by_degree) {
      for (const auto& u : v) members = members && in_fy_basis(m, u) && u.degree() == d;
    }
    for (const auto& [d, v] : aug.by_degree) {
      for (const auto& u : v) members = members && in_aug_fy_basis(m, u) && u.degree() == d;
    }
    r.add(nm.name + " enumerated monomials satisfy their bounds", members);
    const FiniteLattice l = lattice_of_flats(m);
    r.add(nm.name + " generic basis on (L, maximal) = FY(M)",
          translate_basis(l, fy_basis_lattice(l, maximal_building_set(l))) == fy);
    const FiniteLattice la = augmented_lattice(m);
    const BuildingSet g = aug_building_set(m, la);
    r.add(nm.name + " aug building set passes the building-set check", is_building_set(la, g));
    r.add(nm.name + " generic basis on (aug L, aug G) = aug FY(M)",
          translate_basis(la, fy_basis_lattice(la, g)) == aug);
  }
  return r;
}

namespace detail {

template <bool E, class Forward, class Inverse, class Enumerate>
void check_bijection(RunReport& r, const std::string& label, int k, const GradedBasis<Subset>& basis, int shift,
                     Forward forward, Inverse inverse, Enumerate enumerate) {
  const std::string tag = " n=" + std::to_string(k);
  bool round = true;
  bool degree = true;
  std::set<BasicCode<E>> images;
  std::size_t total = 0;
  for (const auto& [d, v] : basis.by_degree) {
    for (const auto& u : v) {
      const BasicCode<E> c = forward(k, u);
      round = round && inverse(k, c) == u && is_valid(c);
      degree = degree && code_index(c) == d - shift;
      images.insert(c);
      ++total;
    }
  }
  std::size_t codes = 0;
  for (const auto& [j, v] : enumerate(k)) {
    for (const BasicCode<E>& c : v) {
      ++codes;
      round = round && forward(k, inverse(k, c)) == c;
    }
  }
  r.add(label + " round trip" + tag, round);
  r.add(label + (shift ? " degree - 1 = index" : " degree = index") + tag, degree);
  r.expect_eq(label + " onto" + tag, codes, images.size());
  r.expect_eq(label + " injective" + tag, total, images.size());
}

}  // namespace detail

/// Round trips, degree/index matching and equivariance of the bijections
/// for lengths 1..n. All permutations up to `exhaustive_up_to`, otherwise
/// `random_count` seeded samples. Also checks the reference tables.
inline RunReport verify_bijection(int n, Family which = Family::Both, int exhaustive_up_to = 5,
                                  int random_count = 100) {
  RunReport r{"bijection", {}};
  const bool plain = which != Family::Extended;
  const bool extended = which != Family::Plain;
  for (int k = 1; k <= n; ++k) {
    const Matroid b = make_boolean(k);
    const bool all = k <= exhaustive_up_to;
    const auto sample = all ? all_permutations(k) : random_sample(k, random_count, 20240 + k);
    const std::string how = all ? " (all sigma)" : " (" + std::to_string(random_count) + " random sigma)";
    auto record = [&](const std::string& name, const EquivarianceReport& eq) {
      r.checks.push_back({name + " equivariant n=" + std::to_string(k) + how, eq.pass, "pass",
                          eq.pass ? "pass (" + std::to_string(eq.checked) + " pairs)" : eq.counterexample});
    };
    if (plain) {
      detail::check_bijection<false>(
          r, "phi", k, fy_basis_matroid(b), 0, [](int m, const FYMonomial& u) { return phi(m, u); },
          [](int m, const Code& c) { return phi_inv(m, c); }, [](int m) { return enumerate_codes(m); });
      record("phi", check_equivariance_phi(k, sample));
    }
    if (extended) {
      detail::check_bijection<true>(
          r, "phi_tilde", k, aug_fy_basis(b), 1, [](int m, const FYMonomial& u) { return phi_tilde(m, u); },
          [](int m, const ExtendedCode& c) { return phi_tilde_inv(m, c); },
          [](int m) { return enumerate_extended_codes(m); });
      record("phi_tilde", check_equivariance_phi_tilde(k, sample));
    }
  }
  if (plain && n >= 4) {
    std::vector<FYMonomial> rows = fy_basis_matroid(make_boolean(4)).by_degree.at(2);
    std::sort(rows.begin(), rows.end(), table_order);
    std::vector<std::pair<std::string, std::string>> table;
    for (const auto& u : rows) table.emplace_back(to_string(u), to_text(phi(4, u)));
    const bool same = table == reference_b4_degree2();
    r.add("n=4 degree-2 table", same, "11 reference rows",
          same ? "11 reference rows" : std::to_string(table.size()) + " rows, differing");
  }
  if (extended) {
    for (const auto& [mono, code] : reference_aug_examples()) {
      r.expect_eq("phi_tilde(" + mono + ")", code, to_text(phi_tilde(9, parse_monomial(mono))));
      r.expect_eq("phi_tilde_inv(" + code + ")", mono, to_string(phi_tilde_inv(9, parse_code_text<true>(code))));
    }
  }
  return r;
}

/// Hilbert-function oracle against the basis counts, every degree.
inline RunReport verify_oracle(const std::vector<NamedMatroid>& ms) {
  RunReport r{"oracle", {}};
  for (const NamedMatroid& nm : ms) {
    const Matroid& m = nm.matroid;
    const auto fy = hilbert_series_fy(fy_basis_matroid(m));
    const auto aug = hilbert_series_fy(aug_fy_basis(m));
    // One degree past the top to confirm the quotient vanishes there.
    auto padded = [](std::vector<std::int64_t> v) {
      v.push_back(0);
      return v;
    };
    r.expect_eq(nm.name + " Chow ring Hilbert function", padded(fy),
                hilbert_quotient_series(chow_presentation(m), static_cast<int>(fy.size())));
    r.expect_eq(nm.name + " augmented Chow ring Hilbert function", padded(aug),
                hilbert_quotient_series(aug_chow_presentation(m), static_cast<int>(aug.size())));
  }
  return r;
}

/// Fan checks: nested sets of the augmented lattice against compatible
/// pairs, the B_2 picture, the star building set against the augmented
/// Bergman complex of B_k, and h-vectors against binomial Eulerian numbers.
inline RunReport verify_fans(const std::vector<NamedMatroid>& ms, int star_up_to, int star_fvector_at) {
  RunReport r{"fans", {}};
  for (const NamedMatroid& nm : ms) {
    const Matroid& m = nm.matroid;
    const FiniteLattice la = augmented_lattice(m);
    const BuildingSet g = aug_building_set(m, la);
    std::set<CompatiblePair> from_nested;
    bool round = true;
    for (const NestedSet& ns : nested_sets(la, g)) {
      if (std::find(ns.begin(), ns.end(), la.top()) != ns.end()) continue;
      const CompatiblePair p = nested_to_pair(m, la, g, ns);
      round = round && pair_to_nested(m, la, g, p) == ns;
      from_nested.insert(p);
    }
    std::set<CompatiblePair> cones;
    for (const AugmentedCone& c : aug_bergman_cones(m)) {
      cones.insert(c.pair);
      round = round && nested_to_pair(m, la, g, pair_to_nested(m, la, g, c.pair)) == c.pair;
    }
    r.add(nm.name + " nested <-> pair round trip", round);
    r.add(nm.name + " nested sets give exactly the compatible pairs", from_nested == cones,
          std::to_string(cones.size()) + " cones", std::to_string(from_nested.size()) + " nested sets");
  }

  {
    const Matroid b2 = make_boolean(2);
    const auto cones = aug_bergman_cones(b2);
    r.expect_eq("B_2 augmented fan cone count", std::size_t{11}, cones.size());
    r.expect_eq("B_2 augmented complex f-vector", std::vector<std::int64_t>{5, 5},
                f_vector(aug_bergman_complex(b2)));
    std::vector<CompatiblePair> maximal;
    for (const auto& c : cones) {
      if (c.pair.dimension() == 2) maximal.push_back(c.pair);
    }
    auto expect = reference_b2_maximal_cones();
    std::sort(expect.begin(), expect.end());
    std::sort(maximal.begin(), maximal.end());
    r.add("B_2 maximal cones match the reference list", maximal == expect);
  }

  auto star_iso = [](int k) {
    const StarBuilding sb = star_building_set(k);
    const auto nested = reduced_nested_complex(sb.lattice, sb.building);
    const auto aug = aug_bergman_complex(make_boolean(k));
    bool faces_ok = true;
    for (const auto& face : nested.faces) {
      const CompatiblePair p = star_nested_to_pair(sb, face);
      faces_ok = faces_ok && is_compatible_pair(make_boolean(k), p);
    }
    return faces_ok &&
           complexes_isomorphic(nested, aug, [&](int v) { return star_tube_to_ray(sb, v); });
  };
  for (int k = 1; k <= star_up_to; ++k) {
    r.add("star nested complex ~ augmented Bergman complex of B_" + std::to_string(k), star_iso(k));
    const auto f = f_vector(aug_bergman_complex(make_boolean(k)));
    r.expect_eq("h-vector of augmented Bergman complex of B_" + std::to_string(k), binomial_eulerian(k), h_vector(f));
  }
  if (star_fvector_at > 0) {
    const int k = star_fvector_at;
    const StarBuilding sb = star_building_set(k);
    r.expect_eq("f-vectors agree at n=" + std::to_string(k),
                f_vector(aug_bergman_complex(make_boolean(k))),
                f_vector(reduced_nested_complex(sb.lattice, sb.building)));
  }
  return r;
}

/// Symmetric-function identities and dimension specializations.
inline RunReport verify_frobenius(int n, int identity_up_to) {
  RunReport r{"frobenius", {}};
  if (identity_up_to >= 1) {
    r.add("generating-function identity up to z^" + std::to_string(identity_up_to), verify_gf_identity(identity_up_to));
    for (int k = 1; k <= identity_up_to; ++k) {
      r.add("recurrence n=" + std::to_string(k), verify_recurrence(k));
    }
  }
  for (int k = 1; k <= n; ++k) {
    const TGradedSym q = Q(k);
    const TGradedSym qt = Q_tilde(k);
    r.expect_eq("dim Q_" + std::to_string(k) + " = A_n", eulerian(k), dimension_series(q, k));
    r.expect_eq("dim Q~_" + std::to_string(k) + " = binomial A_n", binomial_eulerian(k), dimension_series(qt, k));
    bool positive = true;
    for (const auto& [j, p] : q.by_t) positive = positive && p.nonnegative();
    for (const auto& [j, p] : qt.by_t) positive = positive && p.nonnegative();
    r.add("h-positivity n=" + std::to_string(k), positive);
    bool pal = true;
    for (int j = 0; j <= k - 1; ++j) pal = pal && q.slice(j) == q.slice(k - 1 - j);
    r.add("Q_" + std::to_string(k) + " palindromic", pal);
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> v{"codes", "fy", "bijection", "oracle", "fans", "frobenius", "all"};
  return v;
}

/// Runs a named suite at size n. When `ms` is nonempty the matroid-driven
/// suites use it instead of the standard list.
inline RunReport run_suite(const std::string& suite, int n, const std::vector<NamedMatroid>& ms = {}) {
  if (n < 1) throw InputError("n must be >= 1");
  const std::vector<NamedMatroid> matroids = ms.empty() ? standard_matroids(n) : ms;
  if (suite == "codes") return verify_codes(n);
  if (suite == "fy") return verify_fy(matroids, ms.empty() ? n : 0);
  if (suite == "bijection") return verify_bijection(n);
  if (suite == "oracle") return verify_oracle(matroids);
  if (suite == "fans") return verify_fans(matroids, ms.empty() ? std::min(n, 4) : 0, 0);
  if (suite == "frobenius") return verify_frobenius(n, n);
  if (suite == "all") {
    RunReport r{"all", {}};
    for (const std::string& s : suite_names()) {
      if (s != "all") r.merge(run_suite(s, n, ms));
    }
    return r;
  }
  throw InputError("unknown suite '" + suite + "'");
}

}  // namespace chowlab
