#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowlab/lattice.hpp"
#include "chowlab/linalg.hpp"
#include "chowlab/matroid.hpp"
#include "chowlab/parallel.hpp"
#include "chowlab/permutation.hpp"

namespace chowlab {

/// ∏ x_{G_i}^{a_i} over a support G_1, ..., G_k listed along a linear
/// extension of the lattice order (for FY bases of matroids this is a chain
/// ordered by inclusion). The empty support is the monomial 1.
template <class Elem>
struct Monomial {
  std::vector<Elem> chain;
  std::vector<int> exps;

  int degree() const {
    int d = 0;
    for (int a : exps) d += a;
    return d;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using FYMonomial = Monomial<Subset>;

/// Monomials grouped by degree, each group sorted.
template <class Elem>
struct GradedBasis {
  std::map<int, std::vector<Monomial<Elem>>> by_degree;

  void add(Monomial<Elem> m) { by_degree[m.degree()].push_back(std::move(m)); }
  void normalize() {
    for (auto& [d, v] : by_degree) std::sort(v.begin(), v.end());
  }
  std::size_t count(int d) const {
    auto it = by_degree.find(d);
    return it == by_degree.end() ? 0 : it->second.size();
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [d, v] : by_degree) t += v.size();
    return t;
  }
  int max_degree() const { return by_degree.empty() ? -1 : by_degree.rbegin()->first; }
  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;
};

/// Coefficients of Σ_d |B_d| t^d.
template <class Elem>
std::vector<std::int64_t> hilbert_series_fy(const GradedBasis<Elem>& b) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(std::max(b.max_degree(), 0)) + 1, 0);
  for (const auto& [d, v] : b.by_degree) h[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(v.size());
  return h;
}

inline std::string to_string(const FYMonomial& u) {
  if (u.chain.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < u.chain.size(); ++i) {
    s += "x_{" + (u.chain[i].empty() ? std::string() : u.chain[i].compact()) + "}";
    if (u.exps[i] != 1) s += "^" + std::to_string(u.exps[i]);
  }
  return s;
}

// --- FY bases --------------------------------------------------------------

/// The generic basis of D(L, G): monomials supported on G-nested sets N with
/// 1 <= a_G < d(G', G), where G' is the join of the members of N below G.
inline GradedBasis<int> fy_basis_lattice(const FiniteLattice& l, const BuildingSet& g) {
  GradedBasis<int> out;
  for (const NestedSet& n : nested_sets(l, g)) {
    std::vector<int> bound;
    bool empty = false;
    for (int x : n) {
      int below = l.bottom();
      for (int y : n) {
        if (l.less(y, x)) below = l.join(below, y);
      }
      const int b = atom_distance(l, below, x) - 1;
      if (b < 1) {
        empty = true;
        break;
      }
      bound.push_back(b);
    }
    if (empty) continue;
    Monomial<int> m{n, std::vector<int>(n.size(), 1)};
    while (true) {
      out.add(m);
      std::size_t k = 0;
      while (k < m.exps.size() && m.exps[k] == bound[k]) m.exps[k++] = 1;
      if (k == m.exps.size()) break;
      ++m.exps[k];
    }
  }
  out.normalize();
  return out;
}

/// Relabel a lattice-indexed basis by the ground subsets of its labels.
inline GradedBasis<Subset> translate_basis(const FiniteLattice& l, const GradedBasis<int>& b) {
  GradedBasis<Subset> out;
  for (const auto& [d, v] : b.by_degree) {
    for (const Monomial<int>& m : v) {
      FYMonomial u;
      u.exps = m.exps;
      for (int x : m.chain) u.chain.push_back(l.label(x).set);
      out.add(std::move(u));
    }
  }
  out.normalize();
  return out;
}

namespace detail {

// Extends chains of flats upward. `first_cap(F)` bounds a_1, later factors
// use rk(F_i) - rk(F_{i-1}) - 1.
template <class FirstCap>
void fy_chains(const Matroid& m, const std::vector<Subset>& fl, const std::vector<int>& rk, std::size_t prev,
               bool first, FYMonomial& current, GradedBasis<Subset>& out, FirstCap& first_cap) {
  out.add(current);
  for (std::size_t i = 0; i < fl.size(); ++i) {
    int cap;
    if (first) {
      if (fl[i].empty()) continue;
      cap = first_cap(rk[i]);
    } else {
      if (!fl[prev].is_proper_subset_of(fl[i])) continue;
      cap = rk[i] - rk[prev] - 1;
    }
    for (int a = 1; a <= cap; ++a) {
      current.chain.push_back(fl[i]);
      current.exps.push_back(a);
      fy_chains(m, fl, rk, i, false, current, out, first_cap);
      current.chain.pop_back();
      current.exps.pop_back();
    }
  }
}

}  // namespace detail

/// FY(M): chains ∅ = F_0 ⊊ F_1 ⊊ ... ⊊ F_k of flats with
/// 1 <= a_i <= rk(F_i) - rk(F_{i-1}) - 1.
inline GradedBasis<Subset> fy_basis_matroid(const Matroid& m) {
  const std::vector<Subset> fl = flat_list(m);
  std::vector<int> rk;
  for (Subset f : fl) rk.push_back(m.rank(f));
  GradedBasis<Subset> out;
  FYMonomial current;
  auto cap = [](int r) { return r - 1; };
  detail::fy_chains(m, fl, rk, 0, true, current, out, cap);
  out.normalize();
  return out;
}

/// Augmented FY basis: as FY(M) but with 1 <= a_1 <= rk(F_1).
inline GradedBasis<Subset> aug_fy_basis(const Matroid& m) {
  const std::vector<Subset> fl = flat_list(m);
  std::vector<int> rk;
  for (Subset f : fl) rk.push_back(m.rank(f));
  GradedBasis<Subset> out;
  FYMonomial current;
  auto cap = [](int r) { return r; };
  detail::fy_chains(m, fl, rk, 0, true, current, out, cap);
  out.normalize();
  return out;
}

namespace detail {

inline bool chain_bounds_hold(const Matroid& m, const FYMonomial& u, bool augmented) {
  if (u.chain.size() != u.exps.size()) return false;
  Subset prev;
  for (std::size_t i = 0; i < u.chain.size(); ++i) {
    const Subset f = u.chain[i];
    if (!f.is_subset_of(m.ground()) || !m.is_flat(f) || !prev.is_proper_subset_of(f)) return false;
    const int cap = (augmented && i == 0) ? m.rank(f) : m.rank(f) - m.rank(prev) - 1;
    if (u.exps[i] < 1 || u.exps[i] > cap) return false;
    prev = f;
  }
  return true;
}

}  // namespace detail

/// Membership in FY(M), checked directly against the defining bounds.
inline bool in_fy_basis(const Matroid& m, const FYMonomial& u) { return detail::chain_bounds_hold(m, u, false); }

/// Membership in the augmented FY basis.
inline bool in_aug_fy_basis(const Matroid& m, const FYMonomial& u) { return detail::chain_bounds_hold(m, u, true); }

/// σ acts on each flat of the chain; exponents travel with their flats.
inline FYMonomial act_fy(const Permutation& sigma, const FYMonomial& u) {
  FYMonomial v;
  v.exps = u.exps;
  for (Subset f : u.chain) v.chain.push_back(apply(sigma, f));
  return v;
}

// --- presentations and the Hilbert-function oracle -------------------------

struct Variable {
  enum class Kind : std::uint8_t { X, Y };
  Kind kind = Kind::X;
  Subset flat;      // X
  int element = 0;  // Y

  std::string name() const {
    if (kind == Kind::Y) return "y_" + std::to_string(element);
    std::string s = "x_{";
    for (int e : flat.members()) s += std::to_string(e);
    return s + "}";
  }
};

/// Q[variables] / (nonface monomials) / (linear forms). All nonface
/// generators are squarefree quadratic, so the Stanley–Reisner complex is
/// the flag complex of the remaining pairs.
struct Presentation {
  std::vector<Variable> variables;
  std::vector<std::pair<int, int>> nonfaces;
  std::vector<std::vector<std::pair<int, int>>> linear_forms;  // (variable, coefficient)

  int index_of_flat(Subset f) const {
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (variables[i].kind == Variable::Kind::X && variables[i].flat == f) return static_cast<int>(i);
    }
    return -1;
  }
};

/// A(M) as Q[x_F : F ≠ ∅] / <x_F x_G incomparable> / <Σ_{F∋i} x_F>.
inline Presentation chow_presentation(const Matroid& m) {
  Presentation p;
  for (Subset f : flat_list(m)) {
    if (!f.empty()) p.variables.push_back({Variable::Kind::X, f, 0});
  }
  const int nv = static_cast<int>(p.variables.size());
  for (int a = 0; a < nv; ++a) {
    for (int b = a + 1; b < nv; ++b) {
      const Subset fa = p.variables[a].flat, fb = p.variables[b].flat;
      if (!fa.is_subset_of(fb) && !fb.is_subset_of(fa)) p.nonfaces.emplace_back(a, b);
    }
  }
  for (int i = 1; i <= m.n(); ++i) {
    std::vector<std::pair<int, int>> form;
    for (int a = 0; a < nv; ++a) {
      if (p.variables[a].flat.contains(i)) form.emplace_back(a, 1);
    }
    p.linear_forms.push_back(std::move(form));
  }
  return p;
}

/// Ã(M) with variables y_1..y_n and x_F for F ≠ [n]; nonfaces are the
/// incomparable pairs and y_i x_F for i ∉ F; linear forms y_i − Σ_{F∌i} x_F.
inline Presentation aug_chow_presentation(const Matroid& m) {
  Presentation p;
  for (int i = 1; i <= m.n(); ++i) p.variables.push_back({Variable::Kind::Y, Subset(), i});
  for (Subset f : flat_list(m)) {
    if (f != m.ground()) p.variables.push_back({Variable::Kind::X, f, 0});
  }
  const int nv = static_cast<int>(p.variables.size());
  for (int a = 0; a < nv; ++a) {
    for (int b = a + 1; b < nv; ++b) {
      const Variable& va = p.variables[a];
      const Variable& vb = p.variables[b];
      if (va.kind == Variable::Kind::X && vb.kind == Variable::Kind::X) {
        if (!va.flat.is_subset_of(vb.flat) && !vb.flat.is_subset_of(va.flat)) p.nonfaces.emplace_back(a, b);
      } else if (va.kind == Variable::Kind::Y && vb.kind == Variable::Kind::X) {
        if (!vb.flat.contains(va.element)) p.nonfaces.emplace_back(a, b);
      }
    }
  }
  for (int i = 1; i <= m.n(); ++i) {
    std::vector<std::pair<int, int>> form{{i - 1, 1}};
    for (int a = m.n(); a < nv; ++a) {
      if (!p.variables[a].flat.contains(i)) form.emplace_back(a, -1);
    }
    p.linear_forms.push_back(std::move(form));
  }
  return p;
}

/// A monomial of the polynomial ring as a sorted multiset of variable indices.
using RawMonomial = std::vector<int>;

namespace detail {

inline std::vector<std::vector<bool>> nonface_table(const Presentation& p) {
  const std::size_t nv = p.variables.size();
  std::vector<std::vector<bool>> t(nv, std::vector<bool>(nv, false));
  for (auto [a, b] : p.nonfaces) t[a][b] = t[b][a] = true;
  return t;
}

inline bool support_is_face(const std::vector<std::vector<bool>>& nf, const RawMonomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (nf[m[i]][m[j]]) return false;
    }
  }
  return true;
}

inline void sr_dfs(const std::vector<std::vector<bool>>& nf, int d, int from, RawMonomial& current,
                   std::vector<RawMonomial>& out) {
  if (static_cast<int>(current.size()) == d) {
    out.push_back(current);
    return;
  }
  for (int v = from; v < static_cast<int>(nf.size()); ++v) {
    bool ok = true;
    for (int w : current) {
      if (nf[v][w]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(v);
    sr_dfs(nf, d, v, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Degree-d monomials whose support is a face of the Stanley–Reisner
/// complex, in lexicographic order of their variable multisets.
inline std::vector<RawMonomial> sr_monomials(const Presentation& p, int d) {
  std::vector<RawMonomial> out;
  RawMonomial current;
  detail::sr_dfs(detail::nonface_table(p), d, 0, current, out);
  return out;
}

inline std::string to_string(const Presentation& p, const RawMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    s += p.variables[m[i]].name();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

/// dim_Q of the degree-d part of SR / <linear forms>, by exact elimination:
/// |SR_d| minus the rank of {m·ℓ : m ∈ SR_{d-1}, ℓ a linear form} with
/// products of nonface support dropped.
inline std::int64_t hilbert_quotient(const Presentation& p, int d) {
  if (d < 0) return 0;
  const std::vector<RawMonomial> cols = sr_monomials(p, d);
  if (d == 0) return static_cast<std::int64_t>(cols.size());
  std::map<RawMonomial, int> column;
  for (std::size_t i = 0; i < cols.size(); ++i) column.emplace(cols[i], static_cast<int>(i));
  const auto nf = detail::nonface_table(p);
  RowEchelon echelon;
  for (const RawMonomial& m : sr_monomials(p, d - 1)) {
    for (const auto& form : p.linear_forms) {
      std::map<int, Rational> acc;
      for (auto [var, coeff] : form) {
        RawMonomial prod = m;
        prod.insert(std::upper_bound(prod.begin(), prod.end(), var), var);
        if (!detail::support_is_face(nf, prod)) continue;
        acc[column.at(prod)] += coeff;
      }
      SparseRow row;
      for (auto& [c, v] : acc) {
        if (v != 0) row.emplace_back(c, v);
      }
      if (!row.empty()) echelon.add(std::move(row));
    }
  }
  return static_cast<std::int64_t>(cols.size()) - static_cast<std::int64_t>(echelon.rank());
}

/// hilbert_quotient for d = 0..max_degree, degrees computed in parallel.
inline std::vector<std::int64_t> hilbert_quotient_series(const Presentation& p, int max_degree) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(max_degree) + 1, 0);
  parallel_for(h.size(), [&](std::size_t d) { h[d] = hilbert_quotient(p, static_cast<int>(d)); });
  return h;
}

}  // namespace chowlab
