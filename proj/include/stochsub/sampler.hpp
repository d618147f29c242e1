#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "stochsub/guards.hpp"
#include "stochsub/substitution.hpp"
#include "stochsub/words.hpp"

namespace stochsub {

// Generator used for every draw. Trial i of a run with base seed s is seeded
// with trial_seed(s, i); a single sample_iterate call is seeded with
// trial_seed(seed, 0).
using Engine = std::mt19937_64;

// splitmix64 finaliser of seed + (trial + 1) * golden-ratio increment.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct SampleStats {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

struct SamplerOptions {
  // 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
  Guards guards = Guards::defaults();
};

// Draws image indices with the exact rule probabilities whenever the common
// denominator of a letter's distribution fits in 62 bits (rejection sampling
// on integers); falls back to 53-bit uniforms otherwise.
class ImageSampler {
 public:
  explicit ImageSampler(const SubstitutionRule& rule);
  std::size_t draw(Letter a, Engine& engine) const;

 private:
  struct LetterTable {
    std::uint64_t denominator = 0;  // 0 means floating-point fallback
    std::vector<std::uint64_t> cumulative;
    std::vector<double> cumulative_real;
  };
  std::vector<LetterTable> tables_;
};

// One realisation of theta^n(a): n rounds of independent per-letter draws.
Word sample_iterate(const SubstitutionRule& rule, Letter a, std::size_t n, std::uint64_t seed,
                    const Guards& guards = Guards::defaults());

// Applies theta n times to u with an existing engine.
Word sample_iterate_with(const SubstitutionRule& rule, const ImageSampler& sampler, Word u,
                         std::size_t n, Engine& engine, const Guards& guards);

// Mean and standard error of |theta^n(a)|_v / |theta^n(a)| over independent
// trials. Throws if v is not legal.
SampleStats empirical_frequency(const SubstitutionRule& rule, Letter a, const Word& v,
                                std::size_t n, std::size_t trials, std::uint64_t seed,
                                const SamplerOptions& options = {});

struct DirectionEstimate {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double lambda = 0.0;
  std::vector<double> reference;                // R^(1)
  std::vector<std::vector<double>> directions;  // Phi(theta^n(a)) / |theta^n(a)| per trial
  std::vector<double> distances;                // L1 distance of each direction to R^(1)
  double max_distance = 0.0;
  double mean_distance = 0.0;
  std::vector<double> magnitudes;               // |theta^n(a)| / lambda^n per trial
  double mean_magnitude = 0.0;
  double magnitude_standard_error = 0.0;
};

// Per-trial normalised abelianisations of theta^n(a) compared with the PF
// direction. Requires a primitive expanding rule.
DirectionEstimate gw_direction_estimate(const SubstitutionRule& rule, Letter a, std::size_t n,
                                        std::size_t trials, std::uint64_t seed,
                                        const SamplerOptions& options = {});

// Fraction of trials with |theta^n(a)| < K n, with its binomial standard error.
SampleStats length_tail(const SubstitutionRule& rule, Letter a, std::size_t n, double k_factor,
                        std::size_t trials, std::uint64_t seed,
                        const SamplerOptions& options = {});

}  // namespace stochsub
