#pragma once

#include "quotmotive/error.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

namespace quotmotive::oracle {

inline constexpr std::uint64_t default_operation_budget = 10'000'000;

/// Budget per oracle call; QUOTMOTIVE_BUDGET overrides the default.
inline std::uint64_t budget_from_environment() {
  if (const char* env = std::getenv("QUOTMOTIVE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') {
      return value;
    }
    throw SpecError(std::string("QUOTMOTIVE_BUDGET is not a non-negative integer: ") + env);
  }
  return default_operation_budget;
}

struct OracleConfig {
  std::uint64_t budget = budget_from_environment();
  unsigned max_extension_degree = 4;
};

/// Counts elementary operations against a hard limit.
class OperationMeter {
public:
  explicit OperationMeter(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t ops, std::string_view what) {
    if (ops > limit_ - spent_) {
      throw BudgetExceededError(std::string(what) + " exceeds the oracle budget of " + std::to_string(limit_) +
                                " operations");
    }
    spent_ += ops;
  }

  /// Throws unless `ops` more operations would still fit.
  void require(std::uint64_t ops, std::string_view what) const {
    if (ops > limit_ - spent_) {
      throw BudgetExceededError(std::string(what) + " needs about " + std::to_string(ops) +
                                " operations, over the oracle budget of " + std::to_string(limit_));
    }
  }

  bool fits(std::uint64_t ops) const { return ops <= limit_ - spent_; }
  std::uint64_t spent() const { return spent_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t spent_ = 0;
};

} // namespace quotmotive::oracle
