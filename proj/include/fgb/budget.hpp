#pragma once

#include <cstdint>
#include <string>

#include "fgb/errors.hpp"

namespace fgb {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Counts enumeration work (visited words, scanned candidate tuples) against a
/// hard cap. Exceeding the cap raises BudgetExceeded rather than silently
/// truncating an exact count.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetExceeded("enumeration budget exceeded: " +
                           std::to_string(used_) + " > " +
                           std::to_string(limit_));
    }
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t remaining() const noexcept {
    return used_ >= limit_ ? 0 : limit_ - used_;
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace fgb
