#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chowlab/chow.hpp"
#include "chowlab/codes.hpp"
#include "chowlab/matroid.hpp"
#include "chowlab/parallel.hpp"
#include "chowlab/permutation.hpp"

namespace chowlab {

/// FY(B_n) -> C_n: letter j on F_j - F_{j-1}, 0 off F_k, f(j) = a_j.
inline Code phi(int n, const FYMonomial& u) {
  if (!in_fy_basis(make_boolean(n), u)) throw InputError("phi: " + to_string(u) + " is not in FY(B_n)");
  Code c{std::vector<int>(static_cast<std::size_t>(n), 0), u.exps};
  Subset prev;
  for (std::size_t j = 0; j < u.chain.size(); ++j) {
    for (int i : (u.chain[j] - prev).members()) c.alpha[i - 1] = static_cast<int>(j) + 1;
    prev = u.chain[j];
  }
  return c;
}

/// C_n -> FY(B_n): F_j = positions carrying letters 1..j, a_j = f(j).
inline FYMonomial phi_inv(int n, const Code& c) {
  validate(c);
  if (c.length() != n) throw InputError("phi_inv: code length differs from n");
  FYMonomial u;
  Subset f;
  for (int j = 1; j <= c.max_letter(); ++j) {
    for (int i = 1; i <= n; ++i) {
      if (c.alpha[i - 1] == j) f.insert(i);
    }
    u.chain.push_back(f);
    u.exps.push_back(c.marks[j - 1]);
  }
  return u;
}

/// Augmented FY(B_n) -> extended codes.
///
/// a_1 = 1: letter j-1 on F_j - F_{j-1}, ∞ off F_k, f(j) = a_{j+1} for
/// j in [k-1]. a_1 >= 2: letter j on F_j - F_{j-1}, ∞ off F_k,
/// f(1) = a_1 - 1 and f(j) = a_j for j >= 2. The monomial 1 maps to ∞...∞.
inline ExtendedCode phi_tilde(int n, const FYMonomial& u) {
  if (!in_aug_fy_basis(make_boolean(n), u)) {
    throw InputError("phi_tilde: " + to_string(u) + " is not in the augmented FY basis of B_n");
  }
  ExtendedCode c{std::vector<int>(static_cast<std::size_t>(n), kInfinity), {}};
  if (u.chain.empty()) return c;
  const int shift = u.exps.front() == 1 ? 1 : 0;
  Subset prev;
  for (std::size_t j = 0; j < u.chain.size(); ++j) {
    for (int i : (u.chain[j] - prev).members()) c.alpha[i - 1] = static_cast<int>(j) + 1 - shift;
    prev = u.chain[j];
  }
  if (shift == 1) {
    c.marks.assign(u.exps.begin() + 1, u.exps.end());
  } else {
    c.marks = u.exps;
    c.marks.front() -= 1;
  }
  return c;
}

/// Inverse of phi_tilde. A 0 in α can only come from the a_1 = 1 branch.
inline FYMonomial phi_tilde_inv(int n, const ExtendedCode& c) {
  validate(c);
  if (c.length() != n) throw InputError("phi_tilde_inv: code length differs from n");
  FYMonomial u;
  if (std::all_of(c.alpha.begin(), c.alpha.end(), [](int a) { return a == kInfinity; })) return u;
  const bool has_zero = std::find(c.alpha.begin(), c.alpha.end(), 0) != c.alpha.end();
  const int m = c.max_letter();
  const int first = has_zero ? 0 : 1;
  Subset f;
  for (int letter = first; letter <= m; ++letter) {
    for (int i = 1; i <= n; ++i) {
      if (c.alpha[i - 1] == letter) f.insert(i);
    }
    u.chain.push_back(f);
  }
  if (has_zero) {
    u.exps.push_back(1);
    u.exps.insert(u.exps.end(), c.marks.begin(), c.marks.end());
  } else {
    u.exps = c.marks;
    u.exps.front() += 1;
  }
  return u;
}

/// Result of an equivariance run; `counterexample` describes the first
/// failure found.
struct EquivarianceReport {
  bool pass = true;
  std::size_t checked = 0;
  std::string counterexample;
};

namespace detail {

// Checks phi(σ·u) = σ⁻¹·phi(u) (act_code is the right action α∘σ) for every
// u and every σ, over a worker pool.
template <class Forward>
EquivarianceReport check_equivariance_impl(const std::vector<FYMonomial>& basis,
                                           const std::vector<Permutation>& sample, Forward&& forward) {
  std::vector<std::optional<std::string>> failure(sample.size());
  parallel_for(sample.size(), [&](std::size_t s) {
    const Permutation& sigma = sample[s];
    const Permutation sigma_inv = inverse(sigma);
    for (const FYMonomial& u : basis) {
      const auto lhs = forward(act_fy(sigma, u));
      const auto rhs = act_code(sigma_inv, forward(u));
      if (lhs != rhs) {
        failure[s] = "sigma=" + to_string(sigma) + " u=" + to_string(u) + " phi(sigma.u)=" + to_text(lhs) +
                     " sigma.phi(u)=" + to_text(rhs);
        return;
      }
    }
  });
  EquivarianceReport r;
  r.checked = basis.size() * sample.size();
  for (auto& f : failure) {
    if (f) {
      r.pass = false;
      r.counterexample = *f;
      break;
    }
  }
  return r;
}

inline std::vector<FYMonomial> flatten(const GradedBasis<Subset>& b) {
  std::vector<FYMonomial> out;
  for (const auto& [d, v] : b.by_degree) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace detail

/// Equivariance of phi over FY(B_n) for every permutation in `sample`.
inline EquivarianceReport check_equivariance_phi(int n, const std::vector<Permutation>& sample) {
  return detail::check_equivariance_impl(detail::flatten(fy_basis_matroid(make_boolean(n))), sample,
                                         [n](const FYMonomial& u) { return phi(n, u); });
}

/// Equivariance of phi_tilde over the augmented FY basis of B_n.
inline EquivarianceReport check_equivariance_phi_tilde(int n, const std::vector<Permutation>& sample) {
  return detail::check_equivariance_impl(detail::flatten(aug_fy_basis(make_boolean(n))), sample,
                                         [n](const FYMonomial& u) { return phi_tilde(n, u); });
}

/// Both of the above; the first failure wins.
inline EquivarianceReport check_equivariance(int n, const std::vector<Permutation>& sample) {
  EquivarianceReport r1 = check_equivariance_phi(n, sample);
  if (!r1.pass) return r1;
  EquivarianceReport r2 = check_equivariance_phi_tilde(n, sample);
  r2.checked += r1.checked;
  return r2;
}

/// `count` random permutations of [n] from a fixed seed.
inline std::vector<Permutation> random_sample(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Permutation> out;
  for (int i = 0; i < count; ++i) out.push_back(random_permutation(n, rng));
  return out;
}

}  // namespace chowlab
