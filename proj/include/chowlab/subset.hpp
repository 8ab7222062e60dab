#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowlab {

/// Raised for malformed input: bad matroids, invalid codes, out-of-range
/// parameters. The CLI maps it to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxGroundSize = 31;

/// A subset of the ground set {1..n}, stored as a bitmask (bit i-1 <-> i).
///
/// Ordering is lexicographic on the sorted member lists, so {1,2} < {1,3} <
/// {2} and the empty set sorts first. This is the canonical order used by
/// every enumeration in the library.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> members) {
    for (int e : members) insert(e);
  }

  static Subset from_members(const std::vector<int>& members) {
    Subset s;
    for (int e : members) s.insert(e);
    return s;
  }

  /// {1..n}
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const {
    return e >= 1 && e <= 32 && ((bits_ >> (e - 1)) & 1u) != 0;
  }
  void insert(int e) {
    if (e < 1 || e > kMaxGroundSize) {
      throw InputError("element id " + std::to_string(e) + " out of range");
    }
    bits_ |= std::uint32_t{1} << (e - 1);
  }
  void erase(int e) { bits_ &= ~(std::uint32_t{1} << (e - 1)); }

  constexpr bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool is_proper_subset_of(Subset o) const {
    return is_subset_of(o) && bits_ != o.bits_;
  }
  /// Largest member, 0 if empty.
  constexpr int max_element() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;

  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) {
    // Lexicographic on sorted members: compare at the lowest differing bit;
    // the set that owns it comes first unless the other one has run out.
    std::uint32_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    std::uint32_t low = diff & (~diff + 1);
    std::uint32_t above = ~(low | (low - 1));
    bool a_owns = (a.bits_ & low) != 0;
    std::uint32_t other_rest = (a_owns ? b.bits_ : a.bits_) & above;
    if (a_owns) {
      // b's next member is larger than low, unless b has nothing beyond the
      // common prefix, in which case b is a prefix of a.
      return other_rest != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return other_rest != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  /// "{1,3}" style.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : members()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  /// "13" style used in monomial names (x_13). Elements >= 10 are
  /// parenthesized; the empty set renders as "{}".
  std::string compact() const {
    std::string s;
    for (int e : members()) {
      if (e >= 10) s += '(' + std::to_string(e) + ')';
      else s += static_cast<char>('0' + e);
    }
    return s.empty() ? std::string("{}") : s;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of {1..n} in canonical order.
inline std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) out.emplace_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chowlab
