#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "chowlab/subset.hpp"

namespace chowlab {

/// A loopless matroid on {1..n} presented by its list of bases.
///
/// Construction validates the basis-exchange axiom and rejects loops; after
/// that the object is immutable. Rank is max |S ∩ B| over bases, which is
/// plenty fast at the ground-set sizes this library targets.
class Matroid {
 public:
  /// Validating constructor. Bases are deduplicated and sorted canonically.
  Matroid(int n, std::vector<Subset> bases) : n_(n), bases_(std::move(bases)) {
    if (n < 1 || n > kMaxGroundSize) {
      throw InputError("ground set size must be in 1.." + std::to_string(kMaxGroundSize));
    }
    if (bases_.empty()) throw InputError("a matroid needs at least one basis");
    const Subset ground = Subset::full(n);
    for (Subset b : bases_) {
      if (!b.is_subset_of(ground)) throw InputError("basis " + b.to_string() + " leaves the ground set");
    }
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = bases_.front().size();
    for (Subset b : bases_) {
      if (b.size() != rank_) throw InputError("bases have unequal cardinality");
    }
    check_exchange();
    Subset covered;
    for (Subset b : bases_) covered = covered | b;
    if (covered != ground) {
      throw InputError("loop detected: element " +
                       std::to_string((ground - covered).members().front()) + " lies in no basis");
    }
  }

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }
  Subset ground() const { return Subset::full(n_); }

  int rank(Subset s) const {
    int best = 0;
    for (Subset b : bases_) {
      best = std::max(best, (s & b).size());
      if (best == s.size()) break;
    }
    return best;
  }

  Subset closure(Subset s) const {
    const int r = rank(s);
    Subset out = s;
    for (int e = 1; e <= n_; ++e) {
      if (!s.contains(e)) {
        Subset t = s;
        t.insert(e);
        if (rank(t) == r) out.insert(e);
      }
    }
    return out;
  }

  bool is_independent(Subset s) const { return rank(s) == s.size(); }
  bool is_flat(Subset s) const { return closure(s) == s; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  void check_exchange() const {
    // bases_ is sorted, so membership is a binary search.
    auto is_basis = [&](Subset s) { return std::binary_search(bases_.begin(), bases_.end(), s); };
    for (Subset b1 : bases_) {
      for (Subset b2 : bases_) {
        if (b1 == b2) continue;
        for (int x : (b1 - b2).members()) {
          bool found = false;
          for (int y : (b2 - b1).members()) {
            Subset t = b1;
            t.erase(x);
            t.insert(y);
            if (is_basis(t)) {
              found = true;
              break;
            }
          }
          if (!found) {
            throw InputError("not a matroid: basis exchange fails for " + b1.to_string() + ", " +
                             b2.to_string() + " at element " + std::to_string(x));
          }
        }
      }
    }
  }

  int n_;
  int rank_ = 0;
  std::vector<Subset> bases_;
};

inline Matroid from_bases(int n, std::vector<Subset> bases) { return Matroid(n, std::move(bases)); }

inline Matroid make_boolean(int n) {
  if (n < 1) throw InputError("boolean matroid needs n >= 1");
  return Matroid(n, {Subset::full(n)});
}

inline Matroid make_uniform(int n, int r) {
  if (n < 1) throw InputError("uniform matroid needs n >= 1");
  if (r < 1 || r > n) throw InputError("uniform matroid needs 1 <= r <= n");
  std::vector<Subset> bases;
  for (Subset s : all_subsets(n)) {
    if (s.size() == r) bases.push_back(s);
  }
  return Matroid(n, std::move(bases));
}

/// All flats sorted by (rank, canonical order).
inline std::vector<Subset> flat_list(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s : all_subsets(m.n())) {
    if (m.is_flat(s)) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](Subset a, Subset b) { return m.rank(a) < m.rank(b); });
  return out;
}

/// Independent sets in canonical order, ∅ first.
inline std::vector<Subset> independent_sets(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s : all_subsets(m.n())) {
    if (m.is_independent(s)) out.push_back(s);
  }
  return out;
}

/// The lattice of flats as plain data: flats, their ranks and cover pairs.
/// lattice.hpp turns this into a FiniteLattice with join/meet tables.
struct FlatLattice {
  std::vector<Subset> flats;  // sorted by (rank, canonical order)
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) indices into flats
};

inline FlatLattice flats(const Matroid& m) {
  FlatLattice out;
  out.flats = flat_list(m);
  for (Subset f : out.flats) out.ranks.push_back(m.rank(f));
  for (std::size_t i = 0; i < out.flats.size(); ++i) {
    for (std::size_t j = 0; j < out.flats.size(); ++j) {
      if (out.flats[i].is_proper_subset_of(out.flats[j]) && out.ranks[j] == out.ranks[i] + 1) {
        out.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

}  // namespace chowlab
