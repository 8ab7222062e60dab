#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "chowlab/complex.hpp"
#include "chowlab/lattice.hpp"
#include "chowlab/matroid.hpp"

namespace chowlab {

/// Strictly increasing chain of flats F_1 ⊊ ... ⊊ F_k, possibly empty.
using Flag = std::vector<Subset>;
using RayVector = std::vector<int>;

/// I ≤ F: an independent set contained in the smallest flat of the flag.
struct CompatiblePair {
  Subset independent;
  Flag flag;

  int dimension() const { return independent.size() + static_cast<int>(flag.size()); }
  friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
  friend auto operator<=>(const CompatiblePair&, const CompatiblePair&) = default;
};

struct BergmanCone {
  Flag flag;
  std::vector<RayVector> rays;
};

struct AugmentedCone {
  CompatiblePair pair;
  std::vector<RayVector> rays;
};

/// A ray of the augmented Bergman fan: e_i for an element, or -e_{[n]-F}
/// for a proper flat F. Elements sort before flats.
struct AugmentedRay {
  bool is_flat = false;
  int element = 0;
  Subset flat;

  static AugmentedRay of_element(int i) { return {false, i, Subset()}; }
  static AugmentedRay of_flat(Subset f) { return {true, 0, f}; }

  friend bool operator==(const AugmentedRay&, const AugmentedRay&) = default;
  friend std::strong_ordering operator<=>(const AugmentedRay& a, const AugmentedRay& b) {
    if (auto c = a.is_flat <=> b.is_flat; c != 0) return c;
    if (auto c = a.element <=> b.element; c != 0) return c;
    return a.flat <=> b.flat;
  }

  std::string to_string() const {
    return is_flat ? "x_" + flat.to_string() : "y_" + std::to_string(element);
  }
};

inline bool is_flag(const Flag& f) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!f[i - 1].is_proper_subset_of(f[i])) return false;
  }
  return true;
}

/// e_S reduced modulo e_[n]: the representative with last coordinate 0.
inline RayVector bergman_ray(int n, Subset s) {
  RayVector v(static_cast<std::size_t>(n), 0);
  const int shift = s.contains(n) ? 1 : 0;
  for (int i = 1; i <= n; ++i) v[i - 1] = (s.contains(i) ? 1 : 0) - shift;
  return v;
}

inline RayVector augmented_ray(int n, const AugmentedRay& r) {
  RayVector v(static_cast<std::size_t>(n), 0);
  if (!r.is_flat) {
    v[r.element - 1] = 1;
  } else {
    for (int i = 1; i <= n; ++i) {
      if (!r.flat.contains(i)) v[i - 1] = -1;
    }
  }
  return v;
}

namespace detail {

template <class Visit>
void chains_from(const std::vector<Subset>& pool, std::size_t from, Flag& current, Visit& visit) {
  visit(current);
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (!current.empty() && !current.back().is_proper_subset_of(pool[i])) continue;
    current.push_back(pool[i]);
    chains_from(pool, i + 1, current, visit);
    current.pop_back();
  }
}

// All chains in `pool` (which must be sorted by rank), empty chain first.
inline std::vector<Flag> chains(const std::vector<Subset>& pool) {
  std::vector<Flag> out;
  Flag current;
  auto visit = [&](const Flag& f) { out.push_back(f); };
  chains_from(pool, 0, current, visit);
  return out;
}

}  // namespace detail

/// Cones σ_F of the Bergman fan: one per flag of proper nonempty flats,
/// including the empty flag (the zero cone).
inline std::vector<BergmanCone> bergman_cones(const Matroid& m) {
  std::vector<Subset> proper;
  for (Subset f : flat_list(m)) {
    if (!f.empty() && f != m.ground()) proper.push_back(f);
  }
  std::vector<BergmanCone> out;
  for (Flag& f : detail::chains(proper)) {
    BergmanCone c{std::move(f), {}};
    for (Subset s : c.flag) c.rays.push_back(bergman_ray(m.n(), s));
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<AugmentedRay> pair_rays(const CompatiblePair& p) {
  std::vector<AugmentedRay> out;
  for (int i : p.independent.members()) out.push_back(AugmentedRay::of_element(i));
  for (Subset f : p.flag) out.push_back(AugmentedRay::of_flat(f));
  return out;
}

inline bool is_compatible_pair(const Matroid& m, const CompatiblePair& p) {
  if (!m.is_independent(p.independent) || !is_flag(p.flag)) return false;
  for (Subset f : p.flag) {
    if (!m.is_flat(f) || f == m.ground()) return false;
  }
  return p.flag.empty() || p.independent.is_subset_of(p.flag.front());
}

/// Cones σ_{I≤F} of the augmented Bergman fan, zero cone included, ordered
/// by flag and then by independent set.
inline std::vector<AugmentedCone> aug_bergman_cones(const Matroid& m) {
  std::vector<Subset> proper;
  for (Subset f : flat_list(m)) {
    if (f != m.ground()) proper.push_back(f);
  }
  const std::vector<Subset> ind = independent_sets(m);
  std::vector<AugmentedCone> out;
  for (const Flag& f : detail::chains(proper)) {
    for (Subset i : ind) {
      if (!f.empty() && !i.is_subset_of(f.front())) continue;
      AugmentedCone c{CompatiblePair{i, f}, {}};
      for (const AugmentedRay& r : pair_rays(c.pair)) c.rays.push_back(augmented_ray(m.n(), r));
      out.push_back(std::move(c));
    }
  }
  return out;
}

/// Order complex of the proper nonempty flats; vertices are flats.
inline SimplicialComplex<Subset> bergman_complex(const Matroid& m) {
  SimplicialComplex<Subset> c;
  for (BergmanCone& cone : bergman_cones(m)) {
    if (cone.flag.size() == 1) c.vertices.push_back(cone.flag.front());
    c.add_face(std::move(cone.flag));
  }
  std::sort(c.vertices.begin(), c.vertices.end());
  return c;
}

inline SimplicialComplex<AugmentedRay> aug_bergman_complex(const Matroid& m) {
  SimplicialComplex<AugmentedRay> c;
  for (const AugmentedCone& cone : aug_bergman_cones(m)) {
    std::vector<AugmentedRay> face = pair_rays(cone.pair);
    if (face.size() == 1) c.vertices.push_back(face.front());
    c.add_face(std::move(face));
  }
  std::sort(c.vertices.begin(), c.vertices.end());
  return c;
}

// --- nested sets of L̃(M) <-> compatible pairs -----------------------------

/// A nested set of (L̃(M), aug_building_set) avoiding [n]_* gives the pair
/// I ≤ F with I the union of its singletons and F its starred flats.
inline CompatiblePair nested_to_pair(const Matroid& m, const FiniteLattice& aug, const BuildingSet& g,
                                     const NestedSet& n) {
  if (!is_nested(aug, g, n)) throw InputError("nested_to_pair: input is not nested");
  CompatiblePair p;
  for (int x : n) {
    const Label& l = aug.label(x);
    if (l.kind == LabelKind::Independent) {
      p.independent = p.independent | l.set;
    } else if (l.kind == LabelKind::StarredFlat) {
      if (l.set == m.ground()) throw InputError("nested_to_pair: top element [n]_* is not a cone");
      p.flag.push_back(l.set);
    } else {
      throw InputError("nested_to_pair: element outside the augmented lattice");
    }
  }
  std::sort(p.flag.begin(), p.flag.end(),
            [](Subset a, Subset b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  if (!is_compatible_pair(m, p)) throw std::logic_error("nested set did not yield a compatible pair");
  return p;
}

inline NestedSet pair_to_nested(const Matroid& m, const FiniteLattice& aug, const BuildingSet& g,
                                const CompatiblePair& p) {
  if (!is_compatible_pair(m, p)) throw InputError("pair_to_nested: not a compatible pair");
  NestedSet n;
  for (int i : p.independent.members()) n.push_back(aug.index_of(Label::independent(Subset{i})));
  for (Subset f : p.flag) n.push_back(aug.index_of(Label::starred(f)));
  std::sort(n.begin(), n.end());
  if (!is_nested(aug, g, n)) throw std::logic_error("compatible pair did not yield a nested set");
  return n;
}

/// Nested set of the star building set B(K_{1,n}) (top removed) to a
/// compatible pair of B_n: singleton tubes {i} give I, and each tube
/// S ∪ {*} gives the flat S.
inline CompatiblePair star_nested_to_pair(const StarBuilding& sb, const NestedSet& n) {
  if (!is_nested(sb.lattice, sb.building, n)) throw InputError("star_nested_to_pair: input is not nested");
  const int star = sb.n + 1;
  CompatiblePair p;
  for (int x : n) {
    Subset s = sb.lattice.label(x).set;
    if (s.contains(star)) {
      s.erase(star);
      if (s == Subset::full(sb.n)) throw InputError("star_nested_to_pair: top tube is not a face");
      p.flag.push_back(s);
    } else {
      p.independent = p.independent | s;
    }
  }
  std::sort(p.flag.begin(), p.flag.end(),
            [](Subset a, Subset b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  return p;
}

/// The vertex map underlying star_nested_to_pair.
inline AugmentedRay star_tube_to_ray(const StarBuilding& sb, int element) {
  Subset s = sb.lattice.label(element).set;
  const int star = sb.n + 1;
  if (s.contains(star)) {
    s.erase(star);
    return AugmentedRay::of_flat(s);
  }
  return AugmentedRay::of_element(s.members().front());
}

/// "I={1,3} ; flag=[{1,3,6},{1,3,5,6}] ; rays=[[1,0],[0,1]]"
inline std::string cone_line(const Flag& flag, const std::vector<RayVector>& rays, const Subset* independent) {
  std::string s;
  if (independent != nullptr) s += "I=" + independent->to_string() + " ; ";
  s += "flag=[";
  for (std::size_t i = 0; i < flag.size(); ++i) s += (i ? "," : "") + flag[i].to_string();
  s += "] ; rays=[";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < rays[i].size(); ++j) s += (j ? "," : "") + std::to_string(rays[i][j]);
    s += "]";
  }
  return s + "]";
}

}  // namespace chowlab
