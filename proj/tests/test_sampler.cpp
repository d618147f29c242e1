#include "doctest.h"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "stochsub/error.hpp"
#include "stochsub/sampler.hpp"
#include "test_support.hpp"

using namespace stochsub;
using namespace stochsub::testing;

namespace {

std::size_t fib(std::size_t n) {
  std::size_t a = 1, b = 1;
  for (std::size_t i = 2; i < n; ++i) b = std::exchange(a, b) + b;
  return n <= 2 ? 1 : b;
}

}  // namespace

TEST_CASE("random Fibonacci lengths are Fibonacci numbers") {
  const auto rule = random_fibonacci(q(1, 3));
  for (std::uint64_t seed : {1u, 2u, 99u})
    for (std::size_t n = 0; n <= 10; ++n) CHECK(sample_iterate(rule, 0, n, seed).size() == fib(n + 2));
}

TEST_CASE("deterministic rules yield the unique iterate") {
  const auto rule = fibonacci();
  Word expected{0};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Letter> next;
    for (Letter a : expected)
      for (Letter b : rule.images(a)[0].word) next.push_back(b);
    expected = Word(next);
    CHECK(sample_iterate(rule, 0, n, 1234) == expected);
  }
  const auto stats = empirical_frequency(rule, 0, w(rule, "ab"), 8, 5, 1);
  CHECK(stats.standard_error == 0.0);
  CHECK(stats.estimate == doctest::Approx(21.0 / 55).epsilon(1e-12));
}

TEST_CASE("sampling is a function of the seed") {
  const auto rule = period_doubling();
  CHECK(sample_iterate(rule, 0, 9, 42) == sample_iterate(rule, 0, 9, 42));
  CHECK(sample_iterate(rule, 0, 9, 42) != sample_iterate(rule, 0, 9, 43));
  CHECK(trial_seed(42, 0) != trial_seed(42, 1));
  CHECK(trial_seed(42, 0) != trial_seed(43, 0));
}

TEST_CASE("results do not depend on the thread count") {
  const auto rule = period_doubling();
  SamplerOptions one, many;
  one.threads = 1;
  many.threads = 6;
  const auto a = empirical_frequency(rule, 0, w(rule, "bb"), 8, 64, 7, one);
  const auto b = empirical_frequency(rule, 0, w(rule, "bb"), 8, 64, 7, many);
  CHECK(a.estimate == b.estimate);
  CHECK(a.standard_error == b.standard_error);
  const auto da = gw_direction_estimate(rule, 0, 8, 16, 3, one);
  const auto db = gw_direction_estimate(rule, 0, 8, 16, 3, many);
  CHECK(da.magnitudes == db.magnitudes);
}

TEST_CASE("single letter draws follow the image law") {
  const auto rule = two_letter_kernel(q(1, 3), q(1, 4));
  const ImageSampler sampler(rule);
  Engine engine(5);
  std::size_t first = 0;
  const std::size_t draws = 60'000;
  for (std::size_t i = 0; i < draws; ++i) first += sampler.draw(0, engine) == 0;
  const double p = static_cast<double>(first) / draws;
  CHECK(std::abs(p - 1.0 / 3) < 5 * std::sqrt(2.0 / 9 / draws));
}

TEST_CASE("huge denominators fall back to floating point draws") {
  const std::string den = "12157665459056928801";  // 3^40
  const auto rule = validate_rule(
      {{"a", "b"}, {{"a", {{"ab", "1/" + den}, {"ba", "12157665459056928800/" + den}}}, {"b", {{"a", "1"}}}}});
  const ImageSampler sampler(rule);
  Engine engine(1);
  std::size_t second = 0;
  for (int i = 0; i < 1000; ++i) second += sampler.draw(0, engine) == 1;
  CHECK(second == 1000);
}

TEST_CASE("empirical frequencies approach the measure") {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const auto rule = random_fibonacci();
  const auto stats = empirical_frequency(rule, 0, w(rule, "a"), 15, 200, 20190301);
  CHECK(std::abs(stats.estimate - 1 / phi) <= std::max(0.005, 3 * stats.standard_error));
  CHECK(stats.trials == 200);
  CHECK(stats.n == 15);
}

TEST_CASE("illegal words and bad arguments are rejected") {
  const auto rule = random_fibonacci();
  CHECK_THROWS_AS(empirical_frequency(rule, 0, w(rule, "bbb"), 5, 10, 1), Error);
  CHECK_THROWS_AS(empirical_frequency(rule, 0, w(rule, "a"), 0, 10, 1), Error);
  CHECK_THROWS_AS(empirical_frequency(rule, 0, w(rule, "a"), 5, 0, 1), Error);
}

TEST_CASE("letter budget") {
  Guards tight;
  tight.letter_budget = 100;
  CHECK_THROWS_AS(sample_iterate(period_doubling(), 0, 10, 1, tight), GuardExceeded);
}

TEST_CASE("Galton-Watson directions") {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const auto rf = gw_direction_estimate(random_fibonacci(), 0, 20, 10, 1);
  CHECK(rf.max_distance < 1e-8);
  // |theta^n(a)| = F_{n+2}, and F_{n+2} / phi^n tends to phi^2 / sqrt(5)
  CHECK(rf.mean_magnitude == doctest::Approx(phi * phi / std::sqrt(5.0)).epsilon(1e-8));
  CHECK(rf.magnitude_standard_error < 1e-12);

  const auto pd = gw_direction_estimate(period_doubling(), 0, 12, 100, 1);
  CHECK(pd.max_distance <= 0.02);
  CHECK(pd.directions.size() == 100);

  CHECK_THROWS_AS(gw_direction_estimate(non_expanding(), 0, 4, 4, 1), NotExpanding);
}

TEST_CASE("length tails") {
  CHECK(length_tail(random_fibonacci(), 0, 10, 1.0, 50, 1).estimate == 0.0);
  CHECK(length_tail(non_expanding(), 0, 7, 2.0, 50, 1).estimate == 1.0);
  double previous = 1.0;
  for (std::size_t n : {4u, 8u, 12u}) {
    const double x = length_tail(period_doubling(), 0, n, 1.0, 200, 1).estimate;
    CHECK(x <= previous);
    previous = x;
  }
  CHECK(previous == 0.0);
}

TEST_CASE("sampled iterates follow the exact law") {
  for (const Rational& p1 : {q(1, 2), q(1, 3)}) {
    const auto rule = random_fibonacci(p1);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto exact = iterate_distribution(rule, w(rule, "a"), n);
      const std::size_t trials = 10'000;
      std::map<Word, std::size_t> counts;
      for (std::size_t i = 0; i < trials; ++i) ++counts[sample_iterate(rule, 0, n, trial_seed(77, i))];
      for (const auto& [v, c] : counts) CHECK(exact.entries.count(v) == 1);
      double chi2 = 0;
      for (const auto& [v, p] : exact.entries) {
        const double expected = to_double(p) * trials;
        const double diff = static_cast<double>(counts[v]) - expected;
        chi2 += diff * diff / expected;
      }
      const double df = static_cast<double>(exact.entries.size() - 1);
      INFO("n = " << n << ", chi2 = " << chi2);
      CHECK(boost::math::gamma_q(df / 2, chi2 / 2) > 0.001);
    }
  }
}
