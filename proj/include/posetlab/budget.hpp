#pragma once

#include <chrono>
#include <cstdint>

namespace posetlab {

// Search budget: 0 means unlimited. Node budgets make runs deterministic;
// wall-clock budgets are a safety net (value-determinism then holds only up
// to where the clock fires).
struct Budget {
  std::uint64_t max_nodes = 0;
  std::uint64_t max_ms = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t ms = 0;
  bool budget_exhausted = false;
};

enum class SearchStatus { Found, Exhausted, Budget };

class BudgetClock {
 public:
  explicit BudgetClock(Budget b)
      : b_(b), t0_(std::chrono::steady_clock::now()) {}

  // Count one search node. Returns false once the budget is exhausted.
  bool tick() {
    if (hit_) return false;
    ++nodes_;
    if (b_.max_nodes && nodes_ > b_.max_nodes) hit_ = true;
    if (b_.max_ms && (nodes_ & 1023) == 0 && elapsed_ms() > b_.max_ms) hit_ = true;
    return !hit_;
  }

  bool exhausted() const { return hit_; }
  std::uint64_t nodes() const { return nodes_; }

  std::uint64_t elapsed_ms() const {
    return std::uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0_)
                             .count());
  }

  SearchStats stats() const { return {nodes_, elapsed_ms(), hit_}; }

 private:
  Budget b_;
  std::chrono::steady_clock::time_point t0_;
  std::uint64_t nodes_ = 0;
  bool hit_ = false;
};

}  // namespace posetlab
