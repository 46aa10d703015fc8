#include "ssp/budget.hpp"

#include <cstdlib>
#include <string>

#include "ssp/errors.hpp"

namespace ssp {

std::uint64_t default_enumeration_budget() {
  constexpr std::uint64_t kDefault = 100'000'000;
  const char* env = std::getenv("SSP_MAX_ENUM");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return kDefault;
  return v;
}

void EnumBudget::charge(std::uint64_t n, const char* what) {
  used_ += n;
  if (used_ > limit_) {
    throw BudgetExceeded(std::string(what) + ": enumeration budget of " + std::to_string(limit_) +
                         " candidates exceeded (set SSP_MAX_ENUM to raise it)");
  }
}

}  // namespace ssp
