#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chowlab/subset.hpp"

namespace chowlab {

/// A permutation of {1..n} in one-line notation: p[i-1] = σ(i).
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// The transposition (a b) in S_n.
inline Permutation transposition(int n, int a, int b) {
  Permutation p = identity_permutation(n);
  std::swap(p[a - 1], p[b - 1]);
  return p;
}

inline Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

/// (a ∘ b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

/// σ(S) = {σ(i) : i ∈ S}.
inline Subset apply(const Permutation& p, Subset s) {
  Subset out;
  for (int e : s.members()) out.insert(p[e - 1]);
  return out;
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::string to_string(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace chowlab
