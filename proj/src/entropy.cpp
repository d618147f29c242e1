#include "stochsub/entropy.hpp"

#include <cmath>
#include <set>

#include "stochsub/error.hpp"

namespace stochsub {

const char* to_string(EntropyFlavor f) {
  return f == EntropyFlavor::metric ? "metric" : "topological";
}

double metric_entropy_partial(const FrequencyMeasure& fm, std::size_t n) {
  if (n < 1) throw Error("entropy: n must be at least 1");
  double sum = 0.0;
  for (double r : fm.level(n).eigen.right)
    if (r > 0.0) sum -= r * std::log(r);
  return sum / static_cast<double>(n);
}

double topological_entropy_partial(const FrequencyMeasure& fm, std::size_t n) {
  if (n < 1) throw Error("entropy: n must be at least 1");
  const auto count = fm.language(n)->words(n).size();
  return std::log(static_cast<double>(count)) / static_cast<double>(n);
}

double topological_entropy_partial(const SubstitutionRule& rule, std::size_t n,
                                   const Guards& guards) {
  if (n < 1) throw Error("entropy: n must be at least 1");
  const auto count = build_language(rule, n, guards).words(n).size();
  return std::log(static_cast<double>(count)) / static_cast<double>(n);
}

EntropySeries entropy_series(const FrequencyMeasure& fm, EntropyFlavor flavor, std::size_t max_n) {
  EntropySeries series;
  series.flavor = flavor;
  series.rule = to_raw(fm.rule());
  for (std::size_t n = 1; n <= max_n; ++n) {
    const double h = flavor == EntropyFlavor::metric ? metric_entropy_partial(fm, n)
                                                     : topological_entropy_partial(fm, n);
    series.points.push_back({n, h});
  }
  return series;
}

MaxEntropyReport max_entropy_class_check(const SubstitutionRule& rule, std::size_t max_n,
                                         const Guards& guards) {
  MaxEntropyReport report;
  const auto reference = rule.images(0);
  std::set<std::pair<Word, Rational>> reference_set;
  for (const auto& opt : reference) reference_set.emplace(opt.word, opt.prob);

  for (std::size_t a = 1; a < rule.size(); ++a) {
    std::set<std::pair<Word, Rational>> mine;
    for (const auto& opt : rule.images(static_cast<Letter>(a))) mine.emplace(opt.word, opt.prob);
    if (mine != reference_set) {
      report.reason = "letters have different image distributions";
      return report;
    }
  }
  const std::size_t length = reference.front().word.size();
  for (const auto& opt : reference)
    if (opt.word.size() != length) {
      report.reason = "images have different lengths";
      return report;
    }
  const auto phi = abelianise(reference.front().word, rule.size());
  for (const auto& opt : reference)
    if (abelianise(opt.word, rule.size()) != phi) {
      report.reason = "images have different abelianisations";
      return report;
    }
  if (!is_primitive(rule).primitive) {
    report.reason = "rule is not primitive";
    return report;
  }

  report.qualifies = true;
  report.image_length = length;
  report.image_count = reference.size();
  report.uniform = true;
  for (const auto& opt : reference)
    if (opt.prob != Rational(1, static_cast<unsigned long>(reference.size()))) report.uniform = false;
  if (!report.uniform) return report;

  report.predicted = std::log(static_cast<double>(report.image_count)) / static_cast<double>(length);
  if (!is_expanding(rule)) return report;
  FrequencyMeasure fm(rule, guards);
  for (std::size_t n = max_n; n >= 1; --n) {
    try {
      const double h_top = topological_entropy_partial(fm, n);
      const double h_metric = metric_entropy_partial(fm, n);
      report.compared_n = n;
      report.topological = h_top;
      report.metric = h_metric;
      break;
    } catch (const GuardExceeded&) {
      continue;
    }
  }
  return report;
}

}  // namespace stochsub
