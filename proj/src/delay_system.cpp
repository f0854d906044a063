#include "lightpath/delay_system.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "lightpath/errors.hpp"

namespace lightpath {

DelaySystem::DelaySystem(std::vector<i128> delays) : delays_(std::move(delays)) {
  if (delays_.empty()) throw std::invalid_argument("delay system must not be empty");
  std::sort(delays_.begin(), delays_.end());
  if (delays_.front() < 1) throw std::invalid_argument("delays must be >= 1");
  if (std::adjacent_find(delays_.begin(), delays_.end()) != delays_.end())
    throw std::invalid_argument("delays must be distinct");
  for (i128 d : delays_) total_ = checked_add(total_, d);
}

i128 weighted_sum(const DelaySystem& system, const CoefficientVector& coeffs) {
  if (static_cast<int>(coeffs.size()) != system.size())
    throw std::invalid_argument("coefficient vector size does not match system size");
  i128 sum = 0;
  for (int i = 0; i < system.size(); ++i) {
    if (coeffs[i] < 0) throw std::invalid_argument("coefficients must be >= 0");
    sum = checked_add(sum, checked_mul(coeffs[i], system.delays()[i]));
  }
  return sum;
}

DelaySystem general_system(int n) {
  if (n < 1 || n > kMaxSystemSize)
    throw std::out_of_range("general_system: n must be in [1, " +
                            std::to_string(kMaxSystemSize) + "], got " + std::to_string(n));
  std::vector<i128> delays(n);
  for (int i = 1; i <= n; ++i) delays[i - 1] = pow2(n) - pow2(n - i);
  return DelaySystem(std::move(delays));
}

i128 representation_count(const DelaySystem& system, i128 target, i128 table_cap) {
  if (target < 0) throw std::invalid_argument("target must be >= 0");
  if (target + 1 > table_cap)
    throw ResourceError("representation_count: target " + to_string(target) +
                        " needs a table of " + to_string(target + 1) +
                        " entries, above the cap of " + to_string(table_cap));
  const auto size = static_cast<std::size_t>(target + 1);
  std::vector<i128> ways(size, 0);
  ways[0] = 1;
  for (i128 d : system.delays()) {
    if (d > target) continue;
    const auto step = static_cast<std::size_t>(d);
    for (std::size_t t = step; t < size; ++t) ways[t] = checked_add(ways[t], ways[t - step]);
  }
  return ways[size - 1];
}

bool is_valid_system(const DelaySystem& system, i128 table_cap) {
  return representation_count(system, system.total(), table_cap) == 1;
}

namespace {

// Backtracking state for minimal_system. Keeps one saturating counting
// table per depth, each sized to the largest total any leaf can reach, so
// extending a prefix by one delay costs a single unbounded-coin pass
// instead of a full recount. Counts saturate; the search only needs to
// distinguish "exactly one representation" from "more".
class MinimalSearch {
 public:
  MinimalSearch(int n, i128 max_bound) : n_(n), max_bound_(max_bound) {}

  std::optional<std::vector<i128>> run() {
    // Seed with the general system when it fits the bound. This caps the
    // explored delay range at 2^n - 1 immediately, which keeps counting
    // tables small even for huge max_bound.
    if (n_ <= kMaxSystemSize) {
      const DelaySystem seed = general_system(n_);
      if (seed.largest() <= max_bound_) best_ = seed.delays();
    }
    const i128 cap0 = delay_cap();
    if (cap0 < n_) return best_;  // n distinct delays need a largest of at least n
    i128 reach = 0;
    for (int i = 0; i < n_; ++i) reach += cap0 - i;
    if (reach + 1 > kDefaultTableCap)
      throw ResourceError("minimal_system: counting tables would need " +
                          to_string(reach + 1) + " entries, above the cap of " +
                          to_string(kDefaultTableCap));
    table_size_ = static_cast<std::size_t>(reach + 1);
    tables_.assign(static_cast<std::size_t>(n_) + 1,
                   std::vector<std::uint64_t>(table_size_, 0));
    tables_[0][0] = 1;  // zero delays chosen: only the empty combination
    prefix_.clear();
    extend(0, 0);
    return best_;
  }

 private:
  static std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t r = a + b;
    return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
  }

  // Largest delay still worth exploring (inclusive: a tie on the largest
  // delay can still win on lexicographic order; record() settles ties).
  i128 delay_cap() const {
    return best_ ? std::min(max_bound_, best_->back()) : max_bound_;
  }

  void record() {
    if (!best_ || prefix_.back() < best_->back() ||
        (prefix_.back() == best_->back() && prefix_ < *best_)) {
      best_ = prefix_;
    }
  }

  void extend(int depth, i128 prefix_sum) {
    if (depth == n_) {
      record();
      return;
    }
    const int slots_left = n_ - depth - 1;
    const i128 lo = prefix_.empty() ? 1 : prefix_.back() + 1;
    for (i128 d = lo; d <= delay_cap() - slots_left; ++d) {
      if (!valid_extension(depth, d, prefix_sum + d)) continue;
      prefix_.push_back(d);
      extend(depth + 1, prefix_sum + d);
      prefix_.pop_back();
    }
  }

  // Checks that the prefix extended by delay d is itself a correct system.
  // Every subset of a correct system is correct, so an invalid prefix can
  // never be repaired by further delays and the branch dies here.
  bool valid_extension(int depth, i128 d, i128 sum) {
    auto& table = tables_[depth + 1];
    table = tables_[depth];
    const auto step = static_cast<std::size_t>(d);
    for (std::size_t t = step; t < table_size_; ++t)
      table[t] = sat_add(table[t], table[t - step]);
    return table[static_cast<std::size_t>(sum)] == 1;
  }

  int n_;
  i128 max_bound_;
  std::size_t table_size_ = 0;
  std::vector<i128> prefix_;
  std::optional<std::vector<i128>> best_;
  std::vector<std::vector<std::uint64_t>> tables_;
};

}  // namespace

std::optional<DelaySystem> minimal_system(int n, i128 max_bound) {
  if (n < 1) throw std::out_of_range("minimal_system: n must be >= 1");
  if (max_bound < 1) throw std::invalid_argument("minimal_system: max_bound must be >= 1");
  auto found = MinimalSearch(n, max_bound).run();
  if (!found) return std::nullopt;
  return DelaySystem(std::move(*found));
}

i128 verify_minimality(int n, int search_limit) {
  if (n < 1) throw std::out_of_range("verify_minimality: n must be >= 1");
  if (n > search_limit)
    throw ResourceError("verify_minimality: exhaustive search guarded at n <= " +
                        std::to_string(search_limit) + ", got " + std::to_string(n));
  auto best = minimal_system(n, pow2(n) - 1);
  // general_system(n) is valid with largest delay 2^n - 1, so the bounded
  // search always finds something.
  return best->largest();
}

i128 target_time(const DelaySystem& system, i128 arc_delay) {
  if (arc_delay < 0) throw std::invalid_argument("arc_delay must be >= 0");
  return checked_add(system.total(), checked_mul(system.size() - 1, arc_delay));
}

}  // namespace lightpath
