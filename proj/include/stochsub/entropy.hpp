#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stochsub/measure.hpp"
#include "stochsub/substitution.hpp"

namespace stochsub {

enum class EntropyFlavor { metric, topological };

const char* to_string(EntropyFlavor f);

struct EntropyPoint {
  std::size_t n = 0;
  double value = 0.0;
};

// Partial sums h_1..h_max of one flavour together with the rule (and so the
// probabilities) they were computed for.
struct EntropySeries {
  EntropyFlavor flavor = EntropyFlavor::metric;
  RawRule rule;
  std::vector<EntropyPoint> points;
};

// -(1/n) sum_{w in L^n} R^(n)_w log R^(n)_w, natural logarithm.
double metric_entropy_partial(const FrequencyMeasure& fm, std::size_t n);

// log(card L^n) / n.
double topological_entropy_partial(const FrequencyMeasure& fm, std::size_t n);
double topological_entropy_partial(const SubstitutionRule& rule, std::size_t n,
                                   const Guards& guards = Guards::defaults());

EntropySeries entropy_series(const FrequencyMeasure& fm, EntropyFlavor flavor, std::size_t max_n);

// Class of rules sending every letter to the same distribution over words of
// a common length N whose abelianisations all agree. For such rules the
// uniform probability vector gives the measure of maximal entropy with
// entropy log(count) / N.
struct MaxEntropyReport {
  bool qualifies = false;
  std::string reason;  // why the rule does not qualify
  std::size_t image_length = 0;  // N
  std::size_t image_count = 0;   // number of distinct images
  bool uniform = false;
  std::optional<double> predicted;
  // Partial sums at the largest n <= max_n that fits the guards (uniform only).
  std::optional<std::size_t> compared_n;
  std::optional<double> metric;
  std::optional<double> topological;
};

MaxEntropyReport max_entropy_class_check(const SubstitutionRule& rule, std::size_t max_n = 12,
                                         const Guards& guards = Guards::defaults());

}  // namespace stochsub
