#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stochsub/guards.hpp"
#include "stochsub/substitution.hpp"

namespace stochsub {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  // Largest window length for language, induced-matrix and measure checks.
  std::size_t max_ell = 4;
  // Largest n for the exact iterate checks (bounded by the support guard).
  std::size_t max_iterate = 3;
  // Support-size cap for the exact iterate checks; larger n are skipped.
  std::uint64_t iterate_support = 5'000;
  Guards guards = Guards::defaults();
};

// Runs the structural invariants (kernel normalisation, Chapman-Kolmogorov,
// mean-matrix identities, language closure, induced column sums, spectral
// coincidence, measure consistency and normalisation, entropy ordering) on a
// primitive rule. Checks that need an expanding rule are skipped otherwise.
std::vector<CheckResult> run_checks(const SubstitutionRule& rule, const CheckOptions& options = {});

}  // namespace stochsub
