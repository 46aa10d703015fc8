#pragma once

#include <cstdint>
#include <string>

namespace ssp {

/// Cap on candidates examined by exhaustive enumerations. Read from the
/// SSP_MAX_ENUM environment variable; 10^8 when unset or unparsable.
std::uint64_t default_enumeration_budget();

/// Counts candidates and throws BudgetExceeded past the limit.
class EnumBudget {
 public:
  explicit EnumBudget(std::uint64_t limit = default_enumeration_budget()) : limit_(limit) {}

  void charge(std::uint64_t n, const char* what);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace ssp
