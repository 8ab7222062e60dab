#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowlab/codes.hpp"
#include "chowlab/partition.hpp"
#include "chowlab/permutation.hpp"

namespace chowlab {

/// Integer polynomial in t, coefficient of t^i at index i.
using IntPoly = std::vector<std::int64_t>;

inline IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Symmetric function in the complete homogeneous basis with exact integer
/// coefficients. Zero coefficients are never stored.
class HPolynomial {
 public:
  HPolynomial() = default;
  /// c · h_λ
  explicit HPolynomial(const Partition& lambda, std::int64_t c = 1) {
    if (c != 0) terms_[lambda] = c;
  }

  static HPolynomial one() { return HPolynomial(Partition{}); }
  /// h_n, with h_0 = 1.
  static HPolynomial h(int n) { return HPolynomial(n == 0 ? Partition{} : Partition{n}); }

  const std::map<Partition, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Partition& lambda, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  HPolynomial& operator+=(const HPolynomial& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  HPolynomial& operator-=(const HPolynomial& o) {
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
  friend HPolynomial operator-(HPolynomial a, const HPolynomial& b) { return a -= b; }
  friend HPolynomial operator*(std::int64_t k, const HPolynomial& p) {
    HPolynomial out;
    for (const auto& [l, c] : p.terms_) out.add(l, k * c);
    return out;
  }
  friend HPolynomial operator*(const HPolynomial& a, const HPolynomial& b) { return h_multiply(a, b); }

  /// Bilinear extension of h_λ h_μ = h_{λ∪μ}.
  friend HPolynomial h_multiply(const HPolynomial& a, const HPolynomial& b) {
    HPolynomial out;
    for (const auto& [la, ca] : a.terms_) {
      for (const auto& [lb, cb] : b.terms_) out.add(la + lb, ca * cb);
    }
    return out;
  }

  bool nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  friend bool operator==(const HPolynomial&, const HPolynomial&) = default;

  /// "h_{3} + 2h_{2,1}"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // Larger partitions (in reverse lexicographic order) first: h_3 before h_{2,1}.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [l, c] = *it;
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const std::int64_t a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a);
      s += "h_{" + l.to_string() + "}";
      first = false;
    }
    return s;
  }

 private:
  std::map<Partition, std::int64_t> terms_;
};

/// Polynomial in t with HPolynomial coefficients, by t-degree.
class TGradedSym {
 public:
  std::map<int, HPolynomial> by_t;

  HPolynomial slice(int j) const {
    auto it = by_t.find(j);
    return it == by_t.end() ? HPolynomial() : it->second;
  }
  void add(int j, const HPolynomial& p) {
    by_t[j] += p;
    if (by_t[j].is_zero()) by_t.erase(j);
  }
  TGradedSym& operator+=(const TGradedSym& o) {
    for (const auto& [j, p] : o.by_t) add(j, p);
    return *this;
  }
  TGradedSym& operator-=(const TGradedSym& o) {
    for (const auto& [j, p] : o.by_t) add(j, -1 * p);
    return *this;
  }
  friend TGradedSym operator+(TGradedSym a, const TGradedSym& b) { return a += b; }
  friend TGradedSym operator-(TGradedSym a, const TGradedSym& b) { return a -= b; }
  friend TGradedSym operator*(const TGradedSym& a, const TGradedSym& b) {
    TGradedSym out;
    for (const auto& [i, p] : a.by_t) {
      for (const auto& [j, q] : b.by_t) out.add(i + j, p * q);
    }
    return out;
  }
  /// c · t^j · p
  static TGradedSym monomial(int j, const HPolynomial& p) {
    TGradedSym out;
    out.add(j, p);
    return out;
  }
  friend bool operator==(const TGradedSym&, const TGradedSym&) = default;

  std::string to_string() const {
    if (by_t.empty()) return "0";
    std::string s;
    for (const auto& [j, p] : by_t) {
      if (!s.empty()) s += " + ";
      s += j == 0 ? "(" + p.to_string() + ")" : "t^" + std::to_string(j) + "(" + p.to_string() + ")";
    }
    return s;
  }
};

/// Σ over orbits of h_λ, λ the orbit's content partition.
inline HPolynomial frobenius_of_orbits(const std::vector<Partition>& contents) {
  HPolynomial out;
  int weight = -1;
  for (const Partition& l : contents) {
    if (weight >= 0 && l.weight() != weight) throw InputError("frobenius_of_orbits: mixed weights");
    weight = l.weight();
    out.add(l, 1);
  }
  return out;
}

template <bool E>
HPolynomial frobenius_of_codes(const std::vector<BasicCode<E>>& codes) {
  std::vector<Partition> contents;
  for (const auto& o : code_orbits(codes)) contents.push_back(o.content);
  return frobenius_of_orbits(contents);
}

/// Σ_{σ ∈ S_n} t^{des(σ)}, by counting descents of every permutation.
inline IntPoly eulerian(int n) {
  if (n < 1) throw InputError("eulerian needs n >= 1");
  IntPoly a(static_cast<std::size_t>(n), 0);
  for (const Permutation& p : all_permutations(n)) {
    int des = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) des += p[i] > p[i + 1];
    ++a[static_cast<std::size_t>(des)];
  }
  return a;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// 1 + t Σ_{k=1}^n C(n,k) A_k(t).
inline IntPoly binomial_eulerian(int n) {
  if (n < 1) throw InputError("binomial_eulerian needs n >= 1");
  IntPoly out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = 1;
  for (int k = 1; k <= n; ++k) {
    const IntPoly a = eulerian(k);
    for (std::size_t j = 0; j < a.size(); ++j) out[j + 1] += binomial(n, k) * a[j];
  }
  return out;
}

/// Graded Frobenius characteristic of the code module: t^j slice is the
/// orbit sum over C_{n,j}. Q_0 = h_∅.
inline TGradedSym Q(int n) {
  if (n < 0) throw InputError("Q needs n >= 0");
  if (n == 0) return TGradedSym::monomial(0, HPolynomial::one());
  TGradedSym out;
  for (const auto& [j, codes] : enumerate_codes(n)) out.add(j, frobenius_of_codes(codes));
  return out;
}

/// Extended-code analogue: t^j slice is the orbit sum over C̃_{n,j-1}.
inline TGradedSym Q_tilde(int n) {
  if (n < 1) throw InputError("Q_tilde needs n >= 1");
  TGradedSym out;
  for (const auto& [j, codes] : enumerate_extended_codes(n)) out.add(j + 1, frobenius_of_codes(codes));
  return out;
}

/// Checks (Σ_{n<=N} Q_n z^n)(H(tz) − tH(z)) = (1−t)H(z) modulo z^{N+1},
/// coefficient by coefficient in z. No series is inverted.
inline bool verify_gf_identity(int max_n) {
  if (max_n < 1) throw InputError("verify_gf_identity needs N >= 1");
  std::vector<TGradedSym> q;
  for (int n = 0; n <= max_n; ++n) q.push_back(Q(n));
  for (int n = 0; n <= max_n; ++n) {
    TGradedSym lhs;
    for (int m = 0; m <= n; ++m) {
      // h_m (t^m − t)
      TGradedSym factor = TGradedSym::monomial(m, HPolynomial::h(m)) - TGradedSym::monomial(1, HPolynomial::h(m));
      lhs += q[static_cast<std::size_t>(n - m)] * factor;
    }
    const TGradedSym rhs =
        TGradedSym::monomial(0, HPolynomial::h(n)) - TGradedSym::monomial(1, HPolynomial::h(n));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/// h_n + t Σ_{k=1}^n h_{n-k} Q_k.
inline TGradedSym Q_tilde_from_recurrence(int n) {
  TGradedSym out = TGradedSym::monomial(0, HPolynomial::h(n));
  for (int k = 1; k <= n; ++k) {
    out += TGradedSym::monomial(1, HPolynomial::h(n - k)) * Q(k);
  }
  return out;
}

/// Q_tilde(n) from extended-code orbits equals the recurrence built from Q.
inline bool verify_recurrence(int n) { return Q_tilde(n) == Q_tilde_from_recurrence(n); }

/// Specialize h_λ to the multinomial n!/∏λ_i!, the dimension of the
/// permutation module it represents.
inline std::int64_t dimension(const HPolynomial& p, int n) {
  std::int64_t d = 0;
  for (const auto& [l, c] : p.terms()) {
    if (l.weight() != n) throw InputError("dimension: term h_{" + l.to_string() + "} has the wrong weight");
    d += c * multinomial(l);
  }
  return d;
}

inline IntPoly dimension_series(const TGradedSym& q, int n) {
  IntPoly out;
  for (const auto& [j, p] : q.by_t) {
    if (j < 0) throw InputError("negative t-degree");
    if (out.size() <= static_cast<std::size_t>(j)) out.resize(static_cast<std::size_t>(j) + 1, 0);
    out[static_cast<std::size_t>(j)] = dimension(p, n);
  }
  return out;
}

}  // namespace chowlab
