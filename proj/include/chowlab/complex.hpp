#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace chowlab {

/// An abstract simplicial complex over vertices of type V.
///
/// `faces` holds every face including the empty one, each as a sorted
/// vector. Nothing here enforces downward closure; call is_downward_closed.
template <class V>
struct SimplicialComplex {
  std::vector<V> vertices;
  std::set<std::vector<V>> faces;

  void add_face(std::vector<V> face) {
    std::sort(face.begin(), face.end());
    faces.insert(std::move(face));
  }

  bool contains(std::vector<V> face) const {
    std::sort(face.begin(), face.end());
    return faces.count(face) != 0;
  }

  int dimension() const {
    std::size_t m = 0;
    for (const auto& f : faces) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
  }
};

template <class V>
bool is_downward_closed(const SimplicialComplex<V>& c) {
  for (const auto& f : c.faces) {
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      std::vector<V> g;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != skip) g.push_back(f[i]);
      }
      if (c.faces.count(g) == 0) return false;
    }
  }
  return true;
}

/// (f_0, f_1, ...): faces counted by dimension, empty face excluded.
template <class V>
std::vector<std::int64_t> f_vector(const SimplicialComplex<V>& c) {
  std::vector<std::int64_t> f;
  for (const auto& face : c.faces) {
    if (face.empty()) continue;
    if (f.size() < face.size()) f.resize(face.size(), 0);
    ++f[face.size() - 1];
  }
  return f;
}

/// h-vector of a (d-1)-dimensional complex from its f-vector:
/// sum_i h_i t^i = sum_i f_{i-1} t^i (1-t)^{d-i}, with f_{-1} = 1.
inline std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f) {
  const int d = static_cast<int>(f.size());
  std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
  // Binomial coefficients of (1-t)^{d-i}.
  auto binom = [](int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int i = 0; i <= d; ++i) {
    const std::int64_t fi = i == 0 ? 1 : f[static_cast<std::size_t>(i) - 1];
    for (int k = 0; k <= d - i; ++k) {
      const std::int64_t term = fi * binom(d - i, k) * (k % 2 == 0 ? 1 : -1);
      h[static_cast<std::size_t>(i + k)] += term;
    }
  }
  return h;
}

/// True iff `vmap` is a bijection on vertices carrying faces of `a` exactly
/// onto faces of `b`.
template <class V, class W, class Map>
bool complexes_isomorphic(const SimplicialComplex<V>& a, const SimplicialComplex<W>& b, Map&& vmap) {
  if (a.vertices.size() != b.vertices.size() || a.faces.size() != b.faces.size()) return false;
  const std::set<W> targets(b.vertices.begin(), b.vertices.end());
  std::map<V, W> image;
  std::set<W> hit;
  for (const V& v : a.vertices) {
    W w = vmap(v);
    if (targets.count(w) == 0 || !hit.insert(w).second) return false;
    image.emplace(v, w);
  }
  // Injective on faces, so equal counts make "faces to faces" bidirectional.
  for (const auto& face : a.faces) {
    std::vector<W> mapped;
    mapped.reserve(face.size());
    for (const V& v : face) mapped.push_back(image.at(v));
    std::sort(mapped.begin(), mapped.end());
    if (b.faces.count(mapped) == 0) return false;
  }
  return true;
}

}  // namespace chowlab
