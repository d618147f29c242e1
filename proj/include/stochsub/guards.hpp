#pragma once

#include <cstdint>

namespace stochsub {

// Resource limits. All of them can be replaced at once through the
// STOCHSUB_GUARD_LIMIT environment variable (see Guards::from_environment).
struct Guards {
  // Maximum number of words in the support of an iterate distribution.
  std::uint64_t support_limit = 1'000'000;
  // Maximum number of joint image realisations enumerated per column of an
  // induced matrix, and per word during language closure.
  std::uint64_t enumeration_limit = 10'000'000;
  // Maximum number of legal words of a single length.
  std::uint64_t language_limit = 1'000'000;
  // Maximum length of a sampled word.
  std::uint64_t letter_budget = 100'000'000;

  static Guards defaults() { return Guards{}; }
  static Guards from_environment();
};

}  // namespace stochsub
