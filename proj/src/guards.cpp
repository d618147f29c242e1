#include "stochsub/guards.hpp"

#include <cstdlib>
#include <string>

#include "stochsub/error.hpp"

namespace stochsub {

ValidationError::ValidationError(std::vector<std::string> diagnostics)
    : Error([&] {
        std::string msg = "invalid substitution rule:";
        for (const auto& d : diagnostics) msg += "\n  " + d;
        return msg;
      }()),
      diagnostics_(std::move(diagnostics)) {}

Guards Guards::from_environment() {
  Guards g;
  const char* raw = std::getenv("STOCHSUB_GUARD_LIMIT");
  if (raw == nullptr || *raw == '\0') return g;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0)
    throw Error(std::string("STOCHSUB_GUARD_LIMIT must be a positive integer, got '") +
                raw + "'");
  g.support_limit = value;
  g.enumeration_limit = value;
  g.language_limit = value;
  g.letter_budget = value;
  return g;
}

}  // namespace stochsub
