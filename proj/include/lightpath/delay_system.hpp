// Delay labeling systems: sets of per-node delays whose total is reachable
// by exactly one nonnegative combination of the delays (the all-ones one).
// A ray arriving at the stop node at the moment equal to the total has then
// necessarily visited every node exactly once.
#pragma once

#include <optional>
#include <vector>

#include "lightpath/ints.hpp"

namespace lightpath {

// Largest supported system size: both 2^n and the total (n-1)*2^n + 1 must
// stay exactly representable in i128.
inline constexpr int kMaxSystemSize = 120;

// Default cap on counting-table entries allocated by representation_count.
inline constexpr i128 kDefaultTableCap = 100'000'000;

class DelaySystem {
 public:
  // Delays may be given in any order; stored strictly ascending.
  // Throws std::invalid_argument on empty input, delays < 1, or duplicates.
  explicit DelaySystem(std::vector<i128> delays);

  int size() const { return static_cast<int>(delays_.size()); }
  const std::vector<i128>& delays() const { return delays_; }
  i128 total() const { return total_; }
  i128 largest() const { return delays_.back(); }

  friend bool operator==(const DelaySystem&, const DelaySystem&) = default;

 private:
  std::vector<i128> delays_;
  i128 total_ = 0;
};

// Visit counts a_1..a_n paired with a system of the same size.
using CoefficientVector = std::vector<i128>;

// Sum of coeffs[i] * delays[i]. Throws std::invalid_argument on size
// mismatch or a negative coefficient.
i128 weighted_sum(const DelaySystem& system, const CoefficientVector& coeffs);

// The exponential labeling {2^n - 2^(n-1), ..., 2^n - 2^0}; its total is
// (n-1)*2^n + 1. Throws std::out_of_range unless 1 <= n <= kMaxSystemSize.
DelaySystem general_system(int n);

// Exact number of coefficient vectors whose weighted sum equals target,
// counted by dynamic programming over a table of target+1 entries.
// Throws ResourceError when the table would exceed table_cap entries and
// std::overflow_error if a count leaves i128.
i128 representation_count(const DelaySystem& system, i128 target,
                          i128 table_cap = kDefaultTableCap);

// True iff the total has exactly one representation, i.e. the system is a
// correct delay labeling.
bool is_valid_system(const DelaySystem& system, i128 table_cap = kDefaultTableCap);

// Best valid system of size n with every delay <= max_bound: minimizes the
// largest delay, ties broken by lexicographically smallest ascending
// sequence. nullopt when no valid system fits the bound. Backtracking
// search; practical for n up to ~8.
std::optional<DelaySystem> minimal_system(int n, i128 max_bound);

// Smallest achievable largest delay over all valid size-n systems, found by
// exhaustive search up to 2^n - 1 (always attained by general_system).
// Throws ResourceError when n > search_limit.
i128 verify_minimality(int n, int search_limit = 6);

// Arrival moment of a Hamiltonian ray: total plus (n-1) uniform arc delays.
i128 target_time(const DelaySystem& system, i128 arc_delay);

}  // namespace lightpath
