#include "doctest.h"

#include <cmath>

#include "stochsub/entropy.hpp"
#include "stochsub/error.hpp"
#include "test_support.hpp"

using namespace stochsub;
using namespace stochsub::testing;

namespace {

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

// Finite-n metric entropy of zeta at even n = 2m. The frequency vector at
// level 2m is m_i / 2, where the m_i split into two binomial families that
// only overlap on (ab)^m and (ba)^m.
double zeta_metric_oracle(double p, int m) {
  const double q = 1 - p;
  const double err_a = xlogx(std::pow(p, m) + std::pow(q, m + 1)) - xlogx(std::pow(p, m)) -
                       xlogx(std::pow(q, m + 1));
  const double err_b = xlogx(std::pow(p, m + 1) + std::pow(q, m)) - xlogx(std::pow(p, m + 1)) -
                       xlogx(std::pow(q, m));
  const double sum = (2 * m + 1) * (xlogx(p) + xlogx(q)) + err_a + err_b;
  return (std::log(2.0) - sum / 2) / (2 * m);
}

}  // namespace

TEST_CASE("zeta metric entropy matches the finite-n oracle") {
  for (const auto& [num, den] : {std::pair{1, 2}, {1, 4}, {3, 4}, {1, 3}}) {
    const FrequencyMeasure fm(zeta(q(num, den)));
    const double p = static_cast<double>(num) / den;
    for (int m = 1; m <= 6; ++m)
      CHECK(metric_entropy_partial(fm, 2 * m) == doctest::Approx(zeta_metric_oracle(p, m)).epsilon(1e-9));
  }
}

TEST_CASE("zeta entropy is largest at one half") {
  const FrequencyMeasure half(zeta()), low(zeta(q(1, 4))), high(zeta(q(3, 4)));
  for (std::size_t n = 6; n <= 12; ++n) {
    const double h = metric_entropy_partial(half, n);
    CHECK(h >= metric_entropy_partial(low, n));
    CHECK(h >= metric_entropy_partial(high, n));
  }
}

TEST_CASE("zeta topological entropy counts legal words") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto count = static_cast<double>(brute_force_language(zeta(), n).size());
    CHECK(topological_entropy_partial(zeta(), n) == doctest::Approx(std::log(count) / n).epsilon(1e-12));
  }
  // 2^m aligned words, 2^(m+1) shifted words, (ab)^m and (ba)^m in both
  CHECK(topological_entropy_partial(zeta(), 12) ==
        doctest::Approx(std::log(64.0 + 128.0 - 2.0) / 12).epsilon(1e-12));
}

TEST_CASE("metric never exceeds topological") {
  for (const auto& rule : {random_fibonacci(), period_doubling(), zeta(q(1, 3)), dyck()}) {
    const FrequencyMeasure fm(rule);
    const std::size_t top = rule.size() > 2 ? 5 : 10;
    for (std::size_t n = 1; n <= top; ++n)
      CHECK(metric_entropy_partial(fm, n) <= topological_entropy_partial(fm, n) + 1e-9);
  }
}

TEST_CASE("first partial sums") {
  CHECK(topological_entropy_partial(dyck(), 1) == doctest::Approx(std::log(4.0)));
  const FrequencyMeasure fm(random_fibonacci());
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(metric_entropy_partial(fm, 1) == doctest::Approx(-xlogx(1 / phi) - xlogx(1 / (phi * phi))));
}

TEST_CASE("deterministic Fibonacci entropy decays") {
  const FrequencyMeasure fm(fibonacci());
  double previous_metric = 1e9, previous_top = 1e9;
  for (std::size_t n = 2; n <= 12; ++n) {
    const double h = metric_entropy_partial(fm, n);
    const double t = topological_entropy_partial(fm, n);
    CHECK(t == doctest::Approx(std::log(static_cast<double>(n + 1)) / n));
    CHECK(h < previous_metric);
    CHECK(t < previous_top);
    previous_metric = h;
    previous_top = t;
  }
  CHECK(previous_metric <= 0.25);
  CHECK(previous_top <= 0.25);
}

TEST_CASE("entropy series") {
  const FrequencyMeasure fm(zeta());
  const auto series = entropy_series(fm, EntropyFlavor::topological, 4);
  REQUIRE(series.points.size() == 4);
  CHECK(series.points[3].n == 4);
  CHECK(series.points[3].value == doctest::Approx(std::log(10.0) / 4));
  CHECK(series.rule.alphabet == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(metric_entropy_partial(fm, 0), Error);
}

TEST_CASE("maximal entropy class") {
  const auto z = max_entropy_class_check(zeta());
  CHECK(z.qualifies);
  CHECK(z.image_length == 2);
  CHECK(z.image_count == 2);
  CHECK(z.uniform);
  REQUIRE(z.predicted.has_value());
  CHECK(*z.predicted == doctest::Approx(0.5 * std::log(2.0)));
  REQUIRE(z.metric.has_value());
  CHECK(std::abs(*z.metric - *z.topological) <= 0.02);

  const auto skewed = max_entropy_class_check(zeta(q(1, 3)));
  CHECK(skewed.qualifies);
  CHECK_FALSE(skewed.uniform);
  CHECK_FALSE(skewed.predicted.has_value());

  CHECK_FALSE(max_entropy_class_check(random_fibonacci()).qualifies);
  CHECK_FALSE(max_entropy_class_check(period_doubling()).qualifies);
  CHECK_FALSE(max_entropy_class_check(dyck()).qualifies);
  CHECK_FALSE(max_entropy_class_check(random_fibonacci()).reason.empty());
}
