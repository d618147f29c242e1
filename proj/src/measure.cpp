#include "stochsub/measure.hpp"

#include <algorithm>
#include <cmath>

#include "stochsub/error.hpp"
#include "stochsub/induced.hpp"

namespace stochsub {

FrequencyMeasure::FrequencyMeasure(SubstitutionRule rule, Guards guards,
                                   PowerIterationOptions power)
    : rule_(std::move(rule)), guards_(guards), power_(power) {
  if (!is_primitive(rule_).primitive)
    throw NotPrimitive("frequency measure requires a primitive rule");
}

std::shared_ptr<const LanguageTable> FrequencyMeasure::language(std::size_t max_length) const {
  std::lock_guard lock(mutex_);
  if (!language_ || language_->max_length() < max_length)
    language_ = std::make_shared<const LanguageTable>(build_language(rule_, max_length, guards_));
  return language_;
}

const FrequencyLevel& FrequencyMeasure::level(std::size_t ell) const {
  if (ell < 1 || ell > kMaxLevel)
    throw Error("frequency level must be in 1.." + std::to_string(kMaxLevel));
  if (const auto* p = published_[ell].load(std::memory_order_acquire)) return *p;

  const auto table = language(ell);
  std::lock_guard lock(mutex_);
  if (const auto* p = published_[ell].load(std::memory_order_relaxed)) return *p;
  auto level = std::make_unique<FrequencyLevel>();
  level->ell = ell;
  const auto matrix = induced_mean_matrix(rule_, ell, *table, guards_);
  level->words = matrix.labels;
  level->eigen = pf_eigenpair(matrix.values, power_);
  owned_.push_back(std::move(level));
  published_[ell].store(owned_.back().get(), std::memory_order_release);
  return *owned_.back();
}

CylinderValue cylinder_measure(const FrequencyMeasure& fm, const Word& v) {
  if (v.empty()) return {1.0, true};
  const auto& level = fm.level(v.size());
  const auto it = std::lower_bound(level.words.begin(), level.words.end(), v);
  if (it == level.words.end() || *it != v) return {0.0, false};
  return {level.eigen.right[static_cast<std::size_t>(it - level.words.begin())], true};
}

double consistency_residual(const FrequencyMeasure& fm, std::size_t ell0, std::size_t ell) {
  if (ell0 < 1 || ell0 > ell) throw Error("consistency_residual needs 1 <= l0 <= l");
  const auto& coarse = fm.level(ell0);
  const auto& fine = fm.level(ell);
  double worst = 0.0;
  for (std::size_t k = 0; k + ell0 <= ell; ++k) {
    std::vector<double> sums(coarse.words.size(), 0.0);
    for (std::size_t i = 0; i < fine.words.size(); ++i) {
      const Word part = fine.words[i].window(k, ell0);
      const auto it = std::lower_bound(coarse.words.begin(), coarse.words.end(), part);
      if (it == coarse.words.end() || *it != part)
        throw Error("consistency_residual: subword of a legal word is not legal");
      sums[static_cast<std::size_t>(it - coarse.words.begin())] += fine.eigen.right[i];
    }
    for (std::size_t j = 0; j < sums.size(); ++j)
      worst = std::max(worst, std::abs(coarse.eigen.right[j] - sums[j]));
  }
  return worst;
}

ErgodicityProbe unique_ergodicity_probe(const SubstitutionRule& base, std::size_t ell,
                                        std::span<const SubstitutionRule> perturbed,
                                        const Guards& guards) {
  for (const auto& rule : perturbed)
    if (!base.same_supports(rule))
      throw Error("unique_ergodicity_probe: perturbation changes the image supports");

  ErgodicityProbe probe;
  probe.ell = ell;
  FrequencyMeasure reference(base, guards);
  for (const auto& rule : perturbed) {
    FrequencyMeasure other(rule, guards);
    for (std::size_t j = 1; j <= ell; ++j) {
      const auto& a = reference.level(j);
      const auto& b = other.level(j);
      for (std::size_t i = 0; i < a.words.size(); ++i)
        probe.max_deviation =
            std::max(probe.max_deviation, std::abs(a.eigen.right[i] - b.eigen.right[i]));
    }
  }
  probe.verdict = probe.max_deviation > kSensitivityThreshold
                      ? ErgodicityVerdict::sensitive
                      : ErgodicityVerdict::insensitive_up_to_ell;
  return probe;
}

std::vector<SubstitutionRule> default_perturbations(const SubstitutionRule& rule) {
  std::vector<SubstitutionRule> out;
  for (bool ascending : {true, false}) {
    std::vector<std::vector<Rational>> probs(rule.size());
    for (std::size_t a = 0; a < rule.size(); ++a) {
      const std::size_t k = rule.images(static_cast<Letter>(a)).size();
      const unsigned long total = k * (k + 1) / 2;
      for (std::size_t j = 0; j < k; ++j) {
        const unsigned long weight = ascending ? j + 1 : k - j;
        Rational q(weight, total);
        q.canonicalize();
        probs[a].push_back(q);
      }
    }
    out.push_back(reweight(rule, probs));
  }
  return out;
}

const char* to_string(ErgodicityVerdict v) {
  return v == ErgodicityVerdict::sensitive ? "sensitive" : "insensitive-up-to-ell";
}

}  // namespace stochsub
