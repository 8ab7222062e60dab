#pragma once

#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chowlab {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Incremental exact Gaussian elimination over Q.
///
/// Rows are reduced against the stored pivot rows as they arrive; a row that
/// survives with a nonzero entry becomes a new pivot (normalized so its
/// leading coefficient is 1). rank() is the number of pivots.
class RowEchelon {
 public:
  /// Returns true if the row was independent of everything added so far.
  bool add(SparseRow row) {
    while (!row.empty()) {
      const int lead = row.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational inv = 1 / row.front().second;
        for (auto& [col, val] : row) val *= inv;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      row = axpy(row, -row.front().second, it->second);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  // row + scale * pivot, merged by column; the leading column cancels.
  static SparseRow axpy(const SparseRow& row, const Rational& scale, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, scale * pivot[j].second);
        ++j;
      } else {
        Rational v = row[i].second + scale * pivot[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<int, SparseRow> pivots_;
};

/// Rank over Q of a list of sparse rows.
inline std::size_t rational_rank(const std::vector<SparseRow>& rows) {
  RowEchelon e;
  for (const SparseRow& r : rows) e.add(r);
  return e.rank();
}

}  // namespace chowlab
