#include "doctest.h"

#include <cmath>
#include <thread>

#include "stochsub/error.hpp"
#include "stochsub/measure.hpp"
#include "test_support.hpp"

using namespace stochsub;
using namespace stochsub::testing;

namespace {

std::vector<double> period_doubling_r2(double p) {
  const double d = 3 * (p * p - p + 2);
  const double mid = 2 * (1 - p + p * p) / d;
  return {2 / d, mid, mid, (p - p * p) / d};
}

}  // namespace

TEST_CASE("period doubling cylinders match the closed form") {
  for (const auto& [num, den] : {std::pair{1, 4}, {1, 2}, {3, 4}, {2, 9}}) {
    const double p = static_cast<double>(num) / den;
    const FrequencyMeasure fm(period_doubling(q(num, den)));
    const auto expected = period_doubling_r2(p);
    const auto& level = fm.level(2);
    REQUIRE(level.words.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(level.eigen.right[i] == doctest::Approx(expected[i]).epsilon(1e-10));
  }
  const FrequencyMeasure half(period_doubling());
  CHECK(cylinder_measure(half, w(half.rule(), "bb")).value ==
        doctest::Approx(1.0 / 21).epsilon(1e-12));
}

TEST_CASE("random Fibonacci letter frequencies") {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const FrequencyMeasure fm(random_fibonacci(q(1, 3)));
  CHECK(cylinder_measure(fm, w(fm.rule(), "a")).value == doctest::Approx(1 / phi).epsilon(1e-12));
  CHECK(cylinder_measure(fm, w(fm.rule(), "b")).value ==
        doctest::Approx(1 / (phi * phi)).epsilon(1e-12));
  CHECK(fm.level(1).eigen.lambda == doctest::Approx(phi).epsilon(1e-12));
}

TEST_CASE("empty and illegal cylinders") {
  const FrequencyMeasure fm(random_fibonacci());
  CHECK(cylinder_measure(fm, Word{}).value == 1.0);
  const auto bbb = cylinder_measure(fm, w(fm.rule(), "bbb"));
  CHECK_FALSE(bbb.legal);
  CHECK(bbb.value == 0.0);
}

TEST_CASE("levels are probability vectors") {
  for (const auto& rule : {random_fibonacci(), period_doubling(q(1, 3)), zeta(q(2, 3))}) {
    const FrequencyMeasure fm(rule);
    for (std::size_t ell = 1; ell <= 6; ++ell) {
      double sum = 0;
      for (double x : fm.level(ell).eigen.right) {
        CHECK(x > 0);
        sum += x;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("marginals are consistent across levels") {
  for (const auto& rule : {random_fibonacci(), period_doubling(q(1, 4)), zeta()}) {
    const FrequencyMeasure fm(rule);
    for (std::size_t ell = 1; ell <= 5; ++ell)
      for (std::size_t ell0 = 1; ell0 <= ell; ++ell0) CHECK(consistency_residual(fm, ell0, ell) <= 1e-9);
  }
}

TEST_CASE("additivity over right extensions") {
  const FrequencyMeasure fm(zeta(q(1, 3)));
  const auto& three = fm.level(3);
  for (const auto& v : fm.level(2).words) {
    double sum = 0;
    for (std::size_t i = 0; i < three.words.size(); ++i)
      if (three.words[i].window(0, 2) == v) sum += three.eigen.right[i];
    CHECK(sum == doctest::Approx(cylinder_measure(fm, v).value).epsilon(1e-10));
  }
}

TEST_CASE("level cache is shared across threads") {
  const FrequencyMeasure fm(period_doubling());
  std::vector<const FrequencyLevel*> seen(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < seen.size(); ++t)
      pool.emplace_back([&, t] { seen[t] = &fm.level(1 + t % 4); });
  }
  for (std::size_t t = 0; t < seen.size(); ++t) CHECK(seen[t] == &fm.level(1 + t % 4));
}

TEST_CASE("measure preconditions") {
  CHECK_THROWS_AS(FrequencyMeasure{identity_rule()}, NotPrimitive);
  const FrequencyMeasure fm(period_doubling());
  CHECK_THROWS_AS(fm.level(0), Error);
  CHECK_THROWS_AS(consistency_residual(fm, 3, 2), Error);
}

TEST_CASE("unique ergodicity probe") {
  const auto pd = period_doubling();
  const auto pd_probe = unique_ergodicity_probe(pd, 2, default_perturbations(pd));
  CHECK(pd_probe.verdict == ErgodicityVerdict::sensitive);
  CHECK(pd_probe.max_deviation > kSensitivityThreshold);

  const auto z = zeta();
  CHECK(unique_ergodicity_probe(z, 2, default_perturbations(z)).verdict ==
        ErgodicityVerdict::sensitive);

  const auto fib = fibonacci();
  const auto fib_probe = unique_ergodicity_probe(fib, 4, default_perturbations(fib));
  CHECK(fib_probe.verdict == ErgodicityVerdict::insensitive_up_to_ell);
  CHECK(std::string(to_string(fib_probe.verdict)) == "insensitive-up-to-ell");

  const std::vector<SubstitutionRule> other{zeta()};
  CHECK_THROWS_AS(unique_ergodicity_probe(pd, 2, other), Error);
}

TEST_CASE("letter frequencies ignore probabilities when image abelianisations agree") {
  // For random Fibonacci every image of a letter has the same letter counts,
  // so the level-one vector is independent of p.
  const auto base = random_fibonacci();
  CHECK(unique_ergodicity_probe(base, 1, default_perturbations(base)).verdict ==
        ErgodicityVerdict::insensitive_up_to_ell);
}
