#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "stochsub/guards.hpp"
#include "stochsub/language.hpp"
#include "stochsub/spectral.hpp"
#include "stochsub/substitution.hpp"

namespace stochsub {

// PF data of the l-induced substitution: the legal l-words in table order
// and the eigenpair of the induced mean matrix (R^(l), L^(l), lambda).
struct FrequencyLevel {
  std::size_t ell = 0;
  std::vector<Word> words;
  PFEigenpair eigen;
};

// Frequency measure of a primitive rule, evaluated on cylinder sets through
// cached R^(l) vectors. Levels are computed on first use; concurrent callers
// see the same cached objects.
class FrequencyMeasure {
 public:
  static constexpr std::size_t kMaxLevel = 64;

  explicit FrequencyMeasure(SubstitutionRule rule, Guards guards = Guards::defaults(),
                            PowerIterationOptions power = {});
  FrequencyMeasure(const FrequencyMeasure&) = delete;
  FrequencyMeasure& operator=(const FrequencyMeasure&) = delete;

  const SubstitutionRule& rule() const { return rule_; }
  const Guards& guards() const { return guards_; }

  const FrequencyLevel& level(std::size_t ell) const;
  // Language table covering at least lengths 1..max_length.
  std::shared_ptr<const LanguageTable> language(std::size_t max_length) const;

 private:
  SubstitutionRule rule_;
  Guards guards_;
  PowerIterationOptions power_;
  mutable std::mutex mutex_;
  mutable std::array<std::atomic<const FrequencyLevel*>, kMaxLevel + 1> published_{};
  mutable std::vector<std::unique_ptr<FrequencyLevel>> owned_;
  mutable std::shared_ptr<const LanguageTable> language_;
};

struct CylinderValue {
  double value = 0.0;
  // False when v is not a legal word; the value is then 0.
  bool legal = true;
};

// mu([v]) = R^(|v|)_v; the empty specification is the whole space (1).
CylinderValue cylinder_measure(const FrequencyMeasure& fm, const Word& v);

// max over v in L^{l0} and positions k of
//   | R^(l0)_v - sum_{u in L^l, u_{[k,k+l0-1]} = v} R^(l)_u |.
double consistency_residual(const FrequencyMeasure& fm, std::size_t ell0, std::size_t ell);

enum class ErgodicityVerdict { sensitive, insensitive_up_to_ell };

struct ErgodicityProbe {
  ErgodicityVerdict verdict = ErgodicityVerdict::insensitive_up_to_ell;
  std::size_t ell = 0;
  // Largest componentwise difference of any R^(j), j <= ell, to the base rule.
  double max_deviation = 0.0;
};

inline constexpr double kSensitivityThreshold = 1e-6;

// Finite-l heuristic: recomputes R^(j) for j <= ell under every perturbed
// rule. Each perturbation must share the supports of the base rule.
ErgodicityProbe unique_ergodicity_probe(const SubstitutionRule& base, std::size_t ell,
                                        std::span<const SubstitutionRule> perturbed,
                                        const Guards& guards = Guards::defaults());

// Two reweightings of the base rule: images of each letter weighted
// proportionally to 1..k and to k..1. Deterministic letters are unchanged.
std::vector<SubstitutionRule> default_perturbations(const SubstitutionRule& rule);

const char* to_string(ErgodicityVerdict v);

}  // namespace stochsub
