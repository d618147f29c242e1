#include "doctest.h"

#include "stochsub/checks.hpp"
#include "test_support.hpp"

using namespace stochsub;
using namespace stochsub::testing;

namespace {

void all_pass(const SubstitutionRule& rule, std::size_t max_ell) {
  CheckOptions options;
  options.max_ell = max_ell;
  const auto results = run_checks(rule, options);
  CHECK_FALSE(results.empty());
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

}  // namespace

TEST_CASE("example rules pass every invariant") {
  all_pass(random_fibonacci(q(1, 3)), 4);
  all_pass(period_doubling(q(1, 4)), 4);
  all_pass(zeta(q(2, 3)), 4);
  all_pass(dyck(), 2);
  all_pass(non_expanding(), 4);
  all_pass(fibonacci(), 4);
}

TEST_CASE("non-primitive rules fail the first check") {
  const auto results = run_checks(identity_rule());
  REQUIRE_FALSE(results.empty());
  CHECK_FALSE(results.front().passed);
}
