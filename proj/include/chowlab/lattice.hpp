#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowlab/complex.hpp"
#include "chowlab/matroid.hpp"
#include "chowlab/subset.hpp"

namespace chowlab {

enum class LabelKind : std::uint8_t { Flat, StarredFlat, Independent, VertexSet, Opaque };

/// What a lattice element stands for. Labels keep their provenance so that
/// a starred flat F_* never compares equal to the independent set F.
struct Label {
  LabelKind kind = LabelKind::Opaque;
  Subset set;
  int id = 0;    // Opaque elements only
  int star = 0;  // VertexSet: the element printed as '*' (0 = none)

  static Label flat(Subset s) { return {LabelKind::Flat, s}; }
  static Label starred(Subset s) { return {LabelKind::StarredFlat, s}; }
  static Label independent(Subset s) { return {LabelKind::Independent, s}; }
  static Label vertices(Subset s, int star = 0) { return {LabelKind::VertexSet, s, 0, star}; }
  static Label opaque(int id) { return {LabelKind::Opaque, Subset(), id}; }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.set <=> b.set; c != 0) return c;
    return a.id <=> b.id;
  }

  std::string to_string() const {
    switch (kind) {
      case LabelKind::Flat:
      case LabelKind::Independent:
        return set.to_string();
      case LabelKind::StarredFlat:
        return set.to_string() + "_*";
      case LabelKind::VertexSet: {
        std::string s = "{";
        bool first = true;
        for (int e : set.members()) {
          if (!first) s += ',';
          s += e == star ? std::string("*") : std::to_string(e);
          first = false;
        }
        return s + "}";
      }
      case LabelKind::Opaque:
        return "#" + std::to_string(id);
    }
    return "?";
  }
};

/// A finite lattice with precomputed order, join and meet tables.
///
/// Built from labels plus a generating relation; the constructor closes the
/// relation transitively, then checks antisymmetry, the existence of all
/// joins and meets, and atomicity. Elements are re-sorted by (rank, label),
/// so index 0 is the bottom and the last index is the top.
class FiniteLattice {
 public:
  /// `relations` lists pairs (a, b) meaning labels[a] <= labels[b].
  FiniteLattice(std::vector<Label> labels, const std::vector<std::pair<int, int>>& relations) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw std::logic_error("empty lattice");
    std::vector<std::uint8_t> le(static_cast<std::size_t>(n) * n, 0);
    auto at = [n](std::vector<std::uint8_t>& m, int a, int b) -> std::uint8_t& {
      return m[static_cast<std::size_t>(a) * n + b];
    };
    for (int i = 0; i < n; ++i) at(le, i, i) = 1;
    for (auto [a, b] : relations) at(le, a, b) = 1;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        if (!at(le, i, k)) continue;
        for (int j = 0; j < n; ++j) {
          if (at(le, k, j)) at(le, i, j) = 1;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (at(le, i, j) && at(le, j, i)) {
          throw std::logic_error("relation is not antisymmetric at " + labels[i].to_string() + ", " +
                                 labels[j].to_string());
        }
      }
    }
    // Longest chain from below; process elements by size of their down-set.
    std::vector<int> down(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) down[i] += at(le, j, i);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return down[a] < down[b]; });
    std::vector<int> height(n, 0);
    for (int x : order) {
      for (int y : order) {
        if (y != x && at(le, y, x)) height[x] = std::max(height[x], height[y] + 1);
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      if (height[a] != height[b]) return height[a] < height[b];
      return labels[a] < labels[b];
    });

    n_ = n;
    labels_.resize(n);
    rank_.resize(n);
    leq_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      labels_[i] = labels[perm[i]];
      rank_[i] = height[perm[i]];
      for (int j = 0; j < n; ++j) leq_[idx(i, j)] = at(le, perm[i], perm[j]);
    }
    for (int i = 0; i + 1 < n; ++i) {
      if (labels_[i] == labels_[i + 1] && rank_[i] == rank_[i + 1]) {
        throw std::logic_error("duplicate label " + labels_[i].to_string());
      }
    }
    build_tables();
    check_atomic();
  }

  int size() const { return n_; }
  int bottom() const { return 0; }
  int top() const { return n_ - 1; }
  int rank(int a) const { return rank_[a]; }
  const Label& label(int a) const { return labels_[a]; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<int>& atoms() const { return atoms_; }

  bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }

  template <class Range>
  int join_all(const Range& r) const {
    int acc = bottom();
    for (int x : r) acc = join(acc, x);
    return acc;
  }

  /// Index of the element with this label, or -1.
  int find(const Label& l) const {
    for (int i = 0; i < n_; ++i) {
      if (labels_[i] == l) return i;
    }
    return -1;
  }

  int index_of(const Label& l) const {
    int i = find(l);
    if (i < 0) throw InputError("no lattice element labelled " + l.to_string());
    return i;
  }

  /// Cover pairs (lower, upper).
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (!less(a, b)) continue;
        bool cover = true;
        for (int c = 0; c < n_ && cover; ++c) {
          if (less(a, c) && less(c, b)) cover = false;
        }
        if (cover) out.emplace_back(a, b);
      }
    }
    return out;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

  void build_tables() {
    join_.assign(static_cast<std::size_t>(n_) * n_, -1);
    meet_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = a; b < n_; ++b) {
        int lub = -1, glb = -1;
        for (int c = 0; c < n_; ++c) {
          if (leq(a, c) && leq(b, c) && (lub < 0 || leq(c, lub))) lub = c;
          if (leq(c, a) && leq(c, b) && (glb < 0 || leq(glb, c))) glb = c;
        }
        // lub is a minimal upper bound; it must be below every upper bound.
        for (int c = 0; c < n_; ++c) {
          if (leq(a, c) && leq(b, c) && !leq(lub, c)) {
            throw std::logic_error("not a lattice: no join of " + labels_[a].to_string() + " and " +
                                   labels_[b].to_string());
          }
          if (leq(c, a) && leq(c, b) && !leq(c, glb)) {
            throw std::logic_error("not a lattice: no meet of " + labels_[a].to_string() + " and " +
                                   labels_[b].to_string());
          }
        }
        join_[idx(a, b)] = join_[idx(b, a)] = lub;
        meet_[idx(a, b)] = meet_[idx(b, a)] = glb;
      }
    }
    if (join_[idx(0, 0)] != 0) throw std::logic_error("lattice has no bottom");
    for (int a = 0; a < n_; ++a) {
      if (!leq(0, a) || !leq(a, n_ - 1)) throw std::logic_error("lattice has no bottom or top");
    }
  }

  void check_atomic() {
    atoms_.clear();
    for (int a = 1; a < n_; ++a) {
      if (rank_[a] == 1) atoms_.push_back(a);
    }
    for (int x = 1; x < n_; ++x) {
      int acc = 0;
      for (int h : atoms_) {
        if (leq(h, x)) acc = join(acc, h);
      }
      if (acc != x) throw std::logic_error("lattice is not atomic at " + labels_[x].to_string());
    }
  }

  int n_ = 0;
  std::vector<Label> labels_;
  std::vector<int> rank_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<int> atoms_;
};

/// A subset of L - {0̂}, as sorted element indices.
struct BuildingSet {
  std::vector<int> members;

  bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
  std::size_t size() const { return members.size(); }
  friend bool operator==(const BuildingSet&, const BuildingSet&) = default;
};

inline BuildingSet make_building_set(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return BuildingSet{std::move(members)};
}

using NestedSet = std::vector<int>;

// --- constructions -------------------------------------------------------

inline FiniteLattice lattice_of_flats(const Matroid& m) {
  std::vector<Subset> fl = flat_list(m);
  std::vector<Label> labels;
  std::vector<std::pair<int, int>> rel;
  for (Subset f : fl) labels.push_back(Label::flat(f));
  for (std::size_t i = 0; i < fl.size(); ++i) {
    for (std::size_t j = 0; j < fl.size(); ++j) {
      if (i != j && fl[i].is_subset_of(fl[j])) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return FiniteLattice(std::move(labels), rel);
}

/// Boolean lattice of all subsets of {1..n}, labelled as vertex sets.
inline FiniteLattice boolean_lattice(int n, int star = 0) {
  std::vector<Subset> all = all_subsets(n);
  std::vector<Label> labels;
  std::vector<std::pair<int, int>> rel;
  for (Subset s : all) labels.push_back(Label::vertices(s, star));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      // Covers suffice; the constructor closes transitively.
      if (all[i].is_subset_of(all[j]) && all[j].size() == all[i].size() + 1) {
        rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return FiniteLattice(std::move(labels), rel);
}

/// L̃(M): independent sets and starred flats, with I ⋖ cl(I)_*.
inline FiniteLattice augmented_lattice(const Matroid& m) {
  std::vector<Subset> ind = independent_sets(m);
  std::vector<Subset> fl = flat_list(m);
  std::vector<Label> labels;
  std::vector<std::pair<int, int>> rel;
  for (Subset i : ind) labels.push_back(Label::independent(i));
  for (Subset f : fl) labels.push_back(Label::starred(f));
  const int off = static_cast<int>(ind.size());
  for (std::size_t a = 0; a < ind.size(); ++a) {
    for (std::size_t b = 0; b < ind.size(); ++b) {
      if (a != b && ind[a].is_subset_of(ind[b])) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  for (std::size_t a = 0; a < fl.size(); ++a) {
    for (std::size_t b = 0; b < fl.size(); ++b) {
      if (a != b && fl[a].is_subset_of(fl[b])) rel.emplace_back(off + static_cast<int>(a), off + static_cast<int>(b));
    }
  }
  for (std::size_t a = 0; a < ind.size(); ++a) {
    const Subset cl = m.closure(ind[a]);
    auto it = std::find(fl.begin(), fl.end(), cl);
    rel.emplace_back(static_cast<int>(a), off + static_cast<int>(it - fl.begin()));
  }
  return FiniteLattice(std::move(labels), rel);
}

inline BuildingSet maximal_building_set(const FiniteLattice& l) {
  std::vector<int> m(static_cast<std::size_t>(l.size()) - 1);
  std::iota(m.begin(), m.end(), 1);
  return BuildingSet{std::move(m)};
}

/// The singletons {i} plus every starred flat F_*.
inline BuildingSet aug_building_set(const Matroid& m, const FiniteLattice& aug) {
  std::vector<int> g;
  for (int i = 1; i <= m.n(); ++i) g.push_back(aug.index_of(Label::independent(Subset{i})));
  for (Subset f : flat_list(m)) g.push_back(aug.index_of(Label::starred(f)));
  return make_building_set(std::move(g));
}

/// Boolean lattice over [n] ∪ {*} (with * = n+1) and the graphical building
/// set of the star graph K_{1,n}: singletons plus every set containing *.
struct StarBuilding {
  int n;
  FiniteLattice lattice;
  BuildingSet building;
};

inline StarBuilding star_building_set(int n) {
  if (n < 1) throw InputError("star graph needs n >= 1");
  const int star = n + 1;
  FiniteLattice l = boolean_lattice(n + 1, star);
  std::vector<int> g;
  for (int x = 1; x < l.size(); ++x) {
    const Subset s = l.label(x).set;
    if (s.size() == 1 || s.contains(star)) g.push_back(x);
  }
  return StarBuilding{n, std::move(l), make_building_set(std::move(g))};
}

// --- building sets and nested sets --------------------------------------

/// Checks the building-set condition for every X in L - {0̂}: the join map
/// from the product of the intervals [0̂, G_i], G_i ranging over the maximal
/// members below X, must be an order isomorphism onto [0̂, X].
inline bool is_building_set(const FiniteLattice& l, const BuildingSet& g) {
  for (int x : g.members) {
    if (x == l.bottom()) return false;
  }
  for (int x = 1; x < l.size(); ++x) {
    std::vector<int> below;
    for (int y : g.members) {
      if (l.leq(y, x)) below.push_back(y);
    }
    std::vector<int> maxes;
    for (int y : below) {
      bool maximal = true;
      for (int z : below) {
        if (l.less(y, z)) maximal = false;
      }
      if (maximal) maxes.push_back(y);
    }
    std::vector<int> target;
    for (int y = 0; y < l.size(); ++y) {
      if (l.leq(y, x)) target.push_back(y);
    }
    std::vector<std::vector<int>> factors;
    std::size_t product = 1;
    for (int gi : maxes) {
      std::vector<int> iv;
      for (int y = 0; y < l.size(); ++y) {
        if (l.leq(y, gi)) iv.push_back(y);
      }
      product *= iv.size();
      if (product > target.size()) return false;
      factors.push_back(std::move(iv));
    }
    if (product != target.size()) return false;

    // Enumerate tuples with a mixed-radix counter.
    std::vector<std::vector<int>> tuples;
    std::vector<int> images;
    std::vector<std::size_t> digit(factors.size(), 0);
    for (std::size_t t = 0; t < product; ++t) {
      std::vector<int> tuple;
      int acc = l.bottom();
      for (std::size_t k = 0; k < factors.size(); ++k) {
        tuple.push_back(factors[k][digit[k]]);
        acc = l.join(acc, tuple.back());
      }
      tuples.push_back(std::move(tuple));
      images.push_back(acc);
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (++digit[k] < factors[k].size()) break;
        digit[k] = 0;
      }
    }
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    // Injective with |product| = |[0̂,X]| and every image <= X: bijective.
    for (std::size_t a = 0; a < product; ++a) {
      for (std::size_t b = 0; b < product; ++b) {
        bool componentwise = true;
        for (std::size_t k = 0; k < factors.size() && componentwise; ++k) {
          componentwise = l.leq(tuples[a][k], tuples[b][k]);
        }
        if (componentwise != l.leq(images[a], images[b])) return false;
      }
    }
  }
  return true;
}

/// True iff every antichain of size >= 2 in `n` has its join outside `g`.
inline bool is_nested(const FiniteLattice& l, const BuildingSet& g, const NestedSet& n) {
  for (int x : n) {
    if (!g.contains(x)) return false;
  }
  const std::size_t k = n.size();
  if (k > 20) throw InputError("nested-set candidate too large");
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<int> chosen;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) chosen.push_back(n[i]);
    }
    bool antichain = true;
    for (std::size_t i = 0; i < chosen.size() && antichain; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && antichain; ++j) {
        if (l.comparable(chosen[i], chosen[j])) antichain = false;
      }
    }
    if (antichain && g.contains(l.join_all(chosen))) return false;
  }
  return true;
}

namespace detail {

// Can `x` join the nested set `current`? Only antichains through x are new.
inline bool extends_nested(const FiniteLattice& l, const BuildingSet& g, const NestedSet& current, int x) {
  std::vector<int> incomparable;
  for (int y : current) {
    if (!l.comparable(x, y)) incomparable.push_back(y);
  }
  const std::size_t k = incomparable.size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    int acc = x;
    bool antichain = true;
    std::vector<int> chosen;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) chosen.push_back(incomparable[i]);
    }
    for (std::size_t i = 0; i < chosen.size() && antichain; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && antichain; ++j) {
        if (l.comparable(chosen[i], chosen[j])) antichain = false;
      }
      acc = l.join(acc, chosen[i]);
    }
    if (antichain && g.contains(acc)) return false;
  }
  return true;
}

inline void nested_dfs(const FiniteLattice& l, const BuildingSet& g, std::size_t from, NestedSet& current,
                       std::vector<NestedSet>& out) {
  out.push_back(current);
  for (std::size_t i = from; i < g.members.size(); ++i) {
    const int x = g.members[i];
    if (!extends_nested(l, g, current, x)) continue;
    current.push_back(x);
    nested_dfs(l, g, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Every G-nested set (including ∅), each sorted by element index, in
/// depth-first lexicographic order.
inline std::vector<NestedSet> nested_sets(const FiniteLattice& l, const BuildingSet& g) {
  std::vector<NestedSet> out;
  NestedSet current;
  detail::nested_dfs(l, g, 0, current, out);
  return out;
}

/// The nested set complex with the cone point 1̂ removed. Vertices are
/// lattice element indices.
inline SimplicialComplex<int> reduced_nested_complex(const FiniteLattice& l, const BuildingSet& g) {
  if (!g.contains(l.top())) throw InputError("reduced nested complex needs the top element in the building set");
  SimplicialComplex<int> c;
  for (int x : g.members) {
    if (x != l.top()) c.vertices.push_back(x);
  }
  for (NestedSet& n : nested_sets(l, g)) {
    if (std::find(n.begin(), n.end(), l.top()) == n.end()) c.add_face(std::move(n));
  }
  return c;
}

/// Minimal d such that gp ∨ H_1 ∨ ... ∨ H_d = g for atoms H_i, by BFS.
inline int atom_distance(const FiniteLattice& l, int gp, int g) {
  if (!l.leq(gp, g)) {
    throw InputError("atom_distance: " + l.label(gp).to_string() + " is not below " + l.label(g).to_string());
  }
  std::vector<int> dist(static_cast<std::size_t>(l.size()), -1);
  std::queue<int> q;
  dist[gp] = 0;
  q.push(gp);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (x == g) return dist[x];
    for (int h : l.atoms()) {
      if (!l.leq(h, g)) continue;
      const int y = l.join(x, h);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  throw std::logic_error("atom_distance: target unreachable in an atomic lattice");
}

}  // namespace chowlab
