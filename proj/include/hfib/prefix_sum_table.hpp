#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace hfib {

/// Memoized two-parameter table of iterated prefix sums.
///
/// Row 0 is the base sequence with entry(0, 0) = 0; row r >= 1 is the running
/// prefix sum of row r-1, filled with entry(r, n) = entry(r-1, n) + entry(r, n-1).
/// Rows are grown eagerly up to the largest requested index.
///
/// Entries live in deques and are never modified once written, so a reference
/// handed out under the lock stays valid and race-free while other threads
/// grow the table.
template <typename T>
class PrefixSumTable {
 public:
  using BaseFn = std::function<T(std::int64_t)>;

  /// `base(n)` is the order-0 term for n >= 1.
  explicit PrefixSumTable(BaseFn base) : base_(std::move(base)) {}

  PrefixSumTable(const PrefixSumTable&) = delete;
  PrefixSumTable& operator=(const PrefixSumTable&) = delete;

  /// Preconditions (checked by callers): n >= 0, order >= 0.
  const T& at(std::int64_t n, std::int64_t order) {
    const auto un = static_cast<std::size_t>(n);
    const auto ur = static_cast<std::size_t>(order);
    {
      std::shared_lock lock(mutex_);
      if (ur < rows_.size() && un < rows_[ur].size()) return rows_[ur][un];
    }
    std::unique_lock lock(mutex_);
    grow(un, ur);
    return rows_[ur][un];
  }

  /// Pointers to entries 0..n of one row.
  std::vector<const T*> row(std::int64_t n, std::int64_t order) {
    const auto un = static_cast<std::size_t>(n);
    const auto ur = static_cast<std::size_t>(order);
    {
      std::shared_lock lock(mutex_);
      if (ur < rows_.size() && un < rows_[ur].size()) return collect(un, ur);
    }
    std::unique_lock lock(mutex_);
    grow(un, ur);
    return collect(un, ur);
  }

 private:
  std::vector<const T*> collect(std::size_t n, std::size_t order) const {
    std::vector<const T*> out;
    out.reserve(n + 1);
    const std::deque<T>& source = rows_[order];
    for (std::size_t k = 0; k <= n; ++k) out.push_back(&source[k]);
    return out;
  }

  void grow(std::size_t n, std::size_t order) {
    while (rows_.size() <= order) rows_.emplace_back();
    for (std::size_t r = 0; r <= order; ++r) {
      std::deque<T>& row = rows_[r];
      if (row.empty()) row.emplace_back();  // entry(r, 0) = 0
      while (row.size() <= n) {
        const std::size_t k = row.size();
        if (r == 0) {
          row.push_back(base_(static_cast<std::int64_t>(k)));
        } else {
          row.push_back(row[k - 1] + rows_[r - 1][k]);
        }
      }
    }
  }

  BaseFn base_;
  std::shared_mutex mutex_;
  std::deque<std::deque<T>> rows_;
};

}  // namespace hfib
