#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chowlab/subset.hpp"

namespace chowlab {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// has weight 0 and indexes h_∅ = 1.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 0) throw InputError("partition parts must be nonnegative");
    }
    parts_.erase(std::remove(parts_.begin(), parts_.end(), 0), parts_.end());
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }
  bool empty() const { return parts_.empty(); }

  /// Multiset union of parts: h_λ h_μ = h_{λ∪μ}.
  friend Partition operator+(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts_;
    v.insert(v.end(), b.parts_.begin(), b.parts_.end());
    return Partition(std::move(v));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// "2,1"; the empty partition prints as "".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

 private:
  std::vector<int> parts_;
};

/// n! / ∏ λ_i!, the number of cosets of the Young subgroup S_λ in S_n.
inline std::int64_t multinomial(const Partition& lambda) {
  std::int64_t r = 1;
  int placed = 0;
  for (int part : lambda.parts()) {
    // C(placed + part, part), built incrementally to stay exact.
    for (int i = 1; i <= part; ++i) r = r * (placed + i) / i;
    placed += part;
  }
  return r;
}

}  // namespace chowlab
