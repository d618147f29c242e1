#include "stochsub/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "stochsub/error.hpp"
#include "stochsub/language.hpp"
#include "stochsub/spectral.hpp"

namespace stochsub {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Runs body(i) for i in [0, trials) on a small worker pool. Each trial owns
// its output slot, so the result is independent of scheduling.
template <typename T, typename Body>
std::vector<T> run_trials(std::size_t trials, unsigned threads, Body body) {
  std::vector<T> results(trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        results[i] = body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = trials;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

struct MeanAndError {
  double mean;
  double standard_error;
};

MeanAndError summarise(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

void require_trials(std::size_t trials) {
  if (trials < 1) throw Error("at least one trial is required");
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed + (trial + 1) * kGolden);
}

ImageSampler::ImageSampler(const SubstitutionRule& rule) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  for (std::size_t a = 0; a < rule.size(); ++a) {
    const auto images = rule.images(static_cast<Letter>(a));
    LetterTable table;
    mpz_class lcm = 1;
    for (const auto& opt : images) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), opt.prob.get_den_mpz_t());
    Rational cumulative = 0;
    if (lcm <= mpz_class(std::to_string(kLimit))) {
      table.denominator = std::stoull(lcm.get_str());
      for (const auto& opt : images) {
        cumulative += opt.prob;
        const mpz_class scaled = cumulative.get_num() * (lcm / cumulative.get_den());
        table.cumulative.push_back(std::stoull(scaled.get_str()));
      }
    } else {
      for (const auto& opt : images) {
        cumulative += opt.prob;
        table.cumulative_real.push_back(cumulative.get_d());
      }
      table.cumulative_real.back() = 1.0;
    }
    tables_.push_back(std::move(table));
  }
}

std::size_t ImageSampler::draw(Letter a, Engine& engine) const {
  const auto& t = tables_[a];
  if (t.denominator == 1) return 0;
  if (t.denominator != 0) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % t.denominator;
    std::uint64_t x = engine();
    while (x >= limit) x = engine();
    x %= t.denominator;
    return static_cast<std::size_t>(
        std::upper_bound(t.cumulative.begin(), t.cumulative.end(), x) - t.cumulative.begin());
  }
  const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  const auto it = std::upper_bound(t.cumulative_real.begin(), t.cumulative_real.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - t.cumulative_real.begin()),
                               t.cumulative_real.size() - 1);
}

Word sample_iterate_with(const SubstitutionRule& rule, const ImageSampler& sampler, Word u,
                         std::size_t n, Engine& engine, const Guards& guards) {
  std::vector<Letter> current(u.begin(), u.end()), next;
  for (std::size_t round = 0; round < n; ++round) {
    next.clear();
    for (Letter a : current) {
      const auto& image = rule.images(a)[sampler.draw(a, engine)].word;
      next.insert(next.end(), image.begin(), image.end());
      if (next.size() > guards.letter_budget)
        throw GuardExceeded("sampled word exceeds the letter budget of " +
                            std::to_string(guards.letter_budget));
    }
    current.swap(next);
  }
  return Word(std::move(current));
}

Word sample_iterate(const SubstitutionRule& rule, Letter a, std::size_t n, std::uint64_t seed,
                    const Guards& guards) {
  if (a >= rule.size()) throw Error("sample_iterate: letter outside the alphabet");
  const ImageSampler sampler(rule);
  Engine engine(trial_seed(seed, 0));
  return sample_iterate_with(rule, sampler, Word{a}, n, engine, guards);
}

SampleStats empirical_frequency(const SubstitutionRule& rule, Letter a, const Word& v,
                                std::size_t n, std::size_t trials, std::uint64_t seed,
                                const SamplerOptions& options) {
  require_trials(trials);
  if (n < 1) throw Error("empirical_frequency: n must be at least 1");
  if (a >= rule.size()) throw Error("empirical_frequency: letter outside the alphabet");
  if (v.empty() || !build_language(rule, v.size(), options.guards).contains(v))
    throw Error("empirical_frequency: word is not legal");

  const ImageSampler sampler(rule);
  const auto values = run_trials<double>(trials, options.threads, [&](std::size_t i) {
    Engine engine(trial_seed(seed, i));
    const Word w = sample_iterate_with(rule, sampler, Word{a}, n, engine, options.guards);
    return static_cast<double>(count_occurrences(w, v)) / static_cast<double>(w.size());
  });
  const auto [mean, se] = summarise(values);
  return {mean, se, trials, n, seed};
}

DirectionEstimate gw_direction_estimate(const SubstitutionRule& rule, Letter a, std::size_t n,
                                        std::size_t trials, std::uint64_t seed,
                                        const SamplerOptions& options) {
  require_trials(trials);
  if (a >= rule.size()) throw Error("gw_direction_estimate: letter outside the alphabet");
  if (!is_primitive(rule).primitive) throw NotPrimitive("gw_direction_estimate: rule not primitive");
  if (!is_expanding(rule)) throw NotExpanding("gw_direction_estimate: rule not expanding");

  const auto pf = pf_eigenpair(mean_matrix(rule).values);
  DirectionEstimate out;
  out.n = n;
  out.trials = trials;
  out.seed = seed;
  out.lambda = pf.lambda;
  out.reference = pf.right;

  const std::size_t m = rule.size();
  const ImageSampler sampler(rule);
  const auto counts = run_trials<std::vector<std::uint64_t>>(trials, options.threads, [&](std::size_t i) {
    Engine engine(trial_seed(seed, i));
    return abelianise(sample_iterate_with(rule, sampler, Word{a}, n, engine, options.guards), m);
  });

  const double scale = std::pow(pf.lambda, static_cast<double>(n));
  for (const auto& phi : counts) {
    double length = 0.0;
    for (auto c : phi) length += static_cast<double>(c);
    std::vector<double> direction(m);
    double distance = 0.0;
    for (std::size_t b = 0; b < m; ++b) {
      direction[b] = static_cast<double>(phi[b]) / length;
      distance += std::abs(direction[b] - pf.right[b]);
    }
    out.directions.push_back(std::move(direction));
    out.distances.push_back(distance);
    out.magnitudes.push_back(length / scale);
  }
  out.max_distance = *std::max_element(out.distances.begin(), out.distances.end());
  out.mean_distance = summarise(out.distances).mean;
  const auto mag = summarise(out.magnitudes);
  out.mean_magnitude = mag.mean;
  out.magnitude_standard_error = mag.standard_error;
  return out;
}

SampleStats length_tail(const SubstitutionRule& rule, Letter a, std::size_t n, double k_factor,
                        std::size_t trials, std::uint64_t seed, const SamplerOptions& options) {
  require_trials(trials);
  if (a >= rule.size()) throw Error("length_tail: letter outside the alphabet");
  const ImageSampler sampler(rule);
  const double threshold = k_factor * static_cast<double>(n);
  const auto below = run_trials<double>(trials, options.threads, [&](std::size_t i) {
    Engine engine(trial_seed(seed, i));
    const Word w = sample_iterate_with(rule, sampler, Word{a}, n, engine, options.guards);
    return static_cast<double>(w.size()) < threshold ? 1.0 : 0.0;
  });
  const auto [fraction, se] = summarise(below);
  return {fraction, se, trials, n, seed};
}

}  // namespace stochsub
