#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chowlab/partition.hpp"
#include "chowlab/permutation.hpp"
#include "chowlab/subset.hpp"

namespace chowlab {

/// The letter ∞ of extended codes. It sorts after every finite letter.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// A marked sequence (α, f). marks[k-1] = f(k), the number of occurrences
/// of k to the left of the marked one, for k = 1..m(α).
///
/// Code (Extended = false) uses letters {0,1,2,...}; ExtendedCode also
/// allows ∞, which behaves like 0 except that the all-∞ code has index −1.
template <bool Extended>
struct BasicCode {
  std::vector<int> alpha;
  std::vector<int> marks;

  static constexpr bool extended = Extended;

  int length() const { return static_cast<int>(alpha.size()); }

  /// m(α): largest finite letter, 0 if none.
  int max_letter() const {
    int m = 0;
    for (int a : alpha) {
      if (a != kInfinity) m = std::max(m, a);
    }
    return m;
  }

  int occurrences(int letter) const { return static_cast<int>(std::count(alpha.begin(), alpha.end(), letter)); }

  friend bool operator==(const BasicCode&, const BasicCode&) = default;
  friend auto operator<=>(const BasicCode&, const BasicCode&) = default;
};

using Code = BasicCode<false>;
using ExtendedCode = BasicCode<true>;

/// Empty string if valid, otherwise the first violated condition.
template <bool E>
std::string code_violation(const BasicCode<E>& c) {
  if (c.alpha.empty()) return "code has length 0";
  for (int a : c.alpha) {
    if (a == kInfinity && !E) return "∞ is only allowed in extended codes";
    if (a < 0) return "negative letter";
  }
  const int m = c.max_letter();
  if (static_cast<int>(c.marks.size()) != m) {
    return "expected " + std::to_string(m) + " marks, got " + std::to_string(c.marks.size());
  }
  for (int k = 1; k <= m; ++k) {
    const int occ = c.occurrences(k);
    if (occ < 2) return "letter " + std::to_string(k) + " occurs fewer than twice";
    const int f = c.marks[k - 1];
    if (f < 1 || f > occ - 1) return "mark of letter " + std::to_string(k) + " out of range";
  }
  return {};
}

template <bool E>
bool is_valid(const BasicCode<E>& c) {
  return code_violation(c).empty();
}

template <bool E>
void validate(const BasicCode<E>& c) {
  if (std::string why = code_violation(c); !why.empty()) throw InputError("invalid code: " + why);
}

/// Σ f(k); an all-∞ extended code has index −1.
template <bool E>
int code_index(const BasicCode<E>& c) {
  validate(c);
  if constexpr (E) {
    if (std::all_of(c.alpha.begin(), c.alpha.end(), [](int a) { return a == kInfinity; })) return -1;
  }
  int s = 0;
  for (int f : c.marks) s += f;
  return s;
}

/// σ·(α_1 ... α_n, f) = (α_σ(1) ... α_σ(n), f), a right action:
/// σ·(τ·c) = (τσ)·c. Pairs with act_fy via σ ↔ σ⁻¹.
template <bool E>
BasicCode<E> act_code(const Permutation& sigma, const BasicCode<E>& c) {
  if (sigma.size() != c.alpha.size() || !is_permutation(sigma)) {
    throw InputError("act_code: permutation size does not match code length");
  }
  BasicCode<E> out{std::vector<int>(c.alpha.size()), c.marks};
  for (std::size_t i = 0; i < c.alpha.size(); ++i) out.alpha[i] = c.alpha[sigma[i] - 1];
  return out;
}

namespace detail {

template <bool E>
std::map<int, std::vector<BasicCode<E>>> enumerate_impl(int n) {
  if (n < 1) throw InputError("code length must be >= 1");
  // Letters in sort order: 0..max_m, then ∞ for extended codes.
  const int max_m = n / 2;
  std::vector<int> letters;
  for (int a = 0; a <= max_m; ++a) letters.push_back(a);
  if (E) letters.push_back(kInfinity);
  const std::size_t base = letters.size();

  std::map<int, std::vector<BasicCode<E>>> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  BasicCode<E> c;
  c.alpha.assign(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int i = 0; i < n; ++i) c.alpha[i] = letters[digit[i]];
    const int m = c.max_letter();
    std::vector<int> occ(static_cast<std::size_t>(m) + 1, 0);
    for (int a : c.alpha) {
      if (a != kInfinity) ++occ[a];
    }
    bool ok = true;
    for (int k = 1; k <= m && ok; ++k) ok = occ[k] >= 2;
    if (ok) {
      const bool all_inf = E && occ[0] == 0 && m == 0;
      c.marks.assign(static_cast<std::size_t>(m), 1);
      while (true) {
        int index = all_inf ? -1 : 0;
        for (int f : c.marks) index += f;
        out[index].push_back(c);
        int k = m - 1;
        while (k >= 0 && c.marks[k] == occ[k + 1] - 1) c.marks[k--] = 1;
        if (k < 0) break;
        ++c.marks[k];
      }
    }
    int i = n - 1;
    while (i >= 0 && digit[i] == base - 1) digit[i--] = 0;
    if (i < 0) break;
    ++digit[i];
  }
  return out;
}

}  // namespace detail

/// All Stembridge codes of length n, grouped by index, each group in
/// lexicographic order of (α, f).
inline std::map<int, std::vector<Code>> enumerate_codes(int n) { return detail::enumerate_impl<false>(n); }

/// All extended codes of length n, grouped by index (−1 .. n−1).
inline std::map<int, std::vector<ExtendedCode>> enumerate_extended_codes(int n) {
  return detail::enumerate_impl<true>(n);
}

/// Letter multiplicities (0 and ∞ included), sorted decreasingly.
template <bool E>
Partition content(const BasicCode<E>& c) {
  std::map<int, int> mult;
  for (int a : c.alpha) ++mult[a];
  std::vector<int> parts;
  for (auto [letter, k] : mult) parts.push_back(k);
  return Partition(std::move(parts));
}

template <bool E>
struct CodeOrbit {
  BasicCode<E> representative;  // lexicographically smallest member
  std::vector<BasicCode<E>> members;
  Partition content;
  std::int64_t size = 0;  // n! / ∏ multiplicities!
};

/// Splits a set of codes into S_n-orbits. Two codes share an orbit iff they
/// have the same marks and the same letter multiset, so the sorted α plus
/// the marks is a complete orbit key.
template <bool E>
std::vector<CodeOrbit<E>> code_orbits(const std::vector<BasicCode<E>>& codes) {
  std::map<BasicCode<E>, CodeOrbit<E>> by_key;
  int n = -1;
  for (const BasicCode<E>& c : codes) {
    if (n < 0) n = c.length();
    if (c.length() != n) throw InputError("code_orbits: codes of different lengths");
    BasicCode<E> key = c;
    std::sort(key.alpha.begin(), key.alpha.end());
    auto [it, inserted] = by_key.try_emplace(key);
    CodeOrbit<E>& o = it->second;
    if (inserted) {
      o.representative = c;
      o.content = content(c);
      o.size = multinomial(o.content);
    } else if (c < o.representative) {
      o.representative = c;
    }
    o.members.push_back(c);
  }
  std::vector<CodeOrbit<E>> out;
  for (auto& [k, o] : by_key) {
    std::sort(o.members.begin(), o.members.end());
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(),
            [](const CodeOrbit<E>& a, const CodeOrbit<E>& b) { return a.representative < b.representative; });
  return out;
}

// --- text form ------------------------------------------------------------

/// Compact text: digits for 0–9, "(k)" for larger letters, "z" for ∞, and a
/// "*" right after each marked occurrence. "11*22*" is (1122, f(1)=f(2)=1).
template <bool E>
std::string to_text(const BasicCode<E>& c) {
  std::vector<int> seen(static_cast<std::size_t>(c.max_letter()) + 1, 0);
  std::string s;
  for (int a : c.alpha) {
    if (a == kInfinity) {
      s += 'z';
      continue;
    }
    s += a < 10 ? std::string(1, static_cast<char>('0' + a)) : "(" + std::to_string(a) + ")";
    if (a >= 1) {
      if (seen[a] == c.marks[a - 1]) s += '*';
      ++seen[a];
    }
  }
  return s;
}

/// Inverse of to_text; validates the result.
template <bool E>
BasicCode<E> parse_code_text(const std::string& text) {
  BasicCode<E> c;
  std::vector<std::pair<int, int>> marked;  // (letter, occurrences before it)
  std::map<int, int> seen;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    int letter;
    if (ch == 'z') {
      letter = kInfinity;
    } else if (ch >= '0' && ch <= '9') {
      letter = ch - '0';
    } else if (ch == '(') {
      const std::size_t close = text.find(')', i);
      if (close == std::string::npos) throw InputError("unterminated '(' in code text");
      letter = std::stoi(text.substr(i + 1, close - i - 1));
      i = close;
    } else if (ch == '*') {
      if (c.alpha.empty() || c.alpha.back() == kInfinity || c.alpha.back() == 0) {
        throw InputError("'*' must follow a positive letter");
      }
      const int k = c.alpha.back();
      marked.emplace_back(k, seen[k] - 1);
      continue;
    } else if (ch == ' ') {
      continue;
    } else {
      throw InputError(std::string("unexpected character '") + ch + "' in code text");
    }
    c.alpha.push_back(letter);
    ++seen[letter];
  }
  c.marks.assign(static_cast<std::size_t>(c.max_letter()), 0);
  std::set<int> done;
  for (auto [k, f] : marked) {
    if (!done.insert(k).second) throw InputError("letter " + std::to_string(k) + " marked twice");
    c.marks[k - 1] = f;
  }
  validate(c);
  return c;
}

}  // namespace chowlab
