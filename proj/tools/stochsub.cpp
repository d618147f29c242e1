// Command-line front end: stochsub <subcommand> --config rule.json [options]

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stochsub/checks.hpp"
#include "stochsub/config.hpp"
#include "stochsub/entropy.hpp"
#include "stochsub/error.hpp"
#include "stochsub/induced.hpp"
#include "stochsub/language.hpp"
#include "stochsub/measure.hpp"
#include "stochsub/sampler.hpp"

namespace {

using nlohmann::json;
using namespace stochsub;

constexpr std::uint64_t kDefaultSeed = 20190301;

struct RunConfig {
  std::string config_path;
  std::string format = "tsv";
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;

  std::size_t ell = 1;
  std::optional<std::string> word;
  std::size_t max_n = 8;
  std::string flavor = "both";
  bool class_check = false;

  std::optional<std::string> letter;
  std::size_t n = 10;
  std::size_t trials = 1;
  std::optional<double> tail_k;
  bool direction = false;

  std::size_t max_ell = 4;
};

std::string tsv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

Letter resolve_letter(const SubstitutionRule& rule, const std::optional<std::string>& symbol) {
  if (!symbol) return 0;
  const auto a = rule.alphabet().find(*symbol);
  if (!a) throw ValidationError({"unknown letter '" + *symbol + "'"});
  return *a;
}

int cmd_language(const RunConfig& cfg, const SubstitutionRule& rule, const Guards& guards) {
  const auto words = legal_words(rule, cfg.ell, guards);
  if (cfg.format == "json") {
    json list = json::array();
    for (const auto& w : words) list.push_back(format_word(w, rule.alphabet()));
    emit({{"ell", cfg.ell}, {"count", words.size()}, {"words", list}});
  } else {
    for (const auto& w : words) std::cout << format_word(w, rule.alphabet()) << "\n";
  }
  return 0;
}

int cmd_matrix(const RunConfig& cfg, const SubstitutionRule& rule, const Guards& guards) {
  const auto m = induced_mean_matrix(rule, cfg.ell, guards);
  if (cfg.format == "json") {
    json labels = json::array(), rows = json::array();
    for (const auto& w : m.labels) labels.push_back(format_word(w, rule.alphabet()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.size(); ++j) row.push_back(format_rational(m.values(i, j)));
      rows.push_back(row);
    }
    emit({{"ell", cfg.ell}, {"labels", labels}, {"matrix", rows}});
  } else {
    for (const auto& w : m.labels) std::cout << "\t" << format_word(w, rule.alphabet());
    std::cout << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::cout << format_word(m.labels[i], rule.alphabet());
      for (std::size_t j = 0; j < m.size(); ++j) std::cout << "\t" << format_rational(m.values(i, j));
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_freqs(const RunConfig& cfg, const SubstitutionRule& rule, const Guards& guards) {
  FrequencyMeasure fm(rule, guards);
  json rows = json::array();
  auto add = [&](const Word& w, const CylinderValue& v) {
    const auto text = format_word(w, rule.alphabet());
    if (!v.legal) std::cerr << "warning: '" << text << "' is not a legal word; measure 0\n";
    if (cfg.format == "json")
      rows.push_back({{"word", text}, {"measure", v.value}, {"legal", v.legal}});
    else
      std::cout << text << "\t" << tsv_number(v.value) << "\n";
  };
  if (cfg.word) {
    const Word w = parse_word(*cfg.word, rule.alphabet());
    add(w, cylinder_measure(fm, w));
  } else {
    const auto& level = fm.level(cfg.ell);
    for (std::size_t i = 0; i < level.words.size(); ++i)
      add(level.words[i], {level.eigen.right[i], true});
  }
  if (cfg.format == "json") emit({{"rows", rows}});
  return 0;
}

int cmd_entropy(const RunConfig& cfg, const SubstitutionRule& rule, const Guards& guards) {
  if (cfg.flavor != "metric" && cfg.flavor != "topological" && cfg.flavor != "both")
    throw ValidationError({"--flavor must be metric, topological or both"});
  const bool metric = cfg.flavor != "topological";
  const bool topological = cfg.flavor != "metric";
  FrequencyMeasure fm(rule, guards);
  json points = json::array();
  if (cfg.format == "tsv") {
    std::cout << "n";
    if (metric) std::cout << "\tmetric";
    if (topological) std::cout << "\ttopological";
    std::cout << "\n";
  }
  for (std::size_t n = 1; n <= cfg.max_n; ++n) {
    json point{{"n", n}};
    if (cfg.format == "tsv") std::cout << n;
    if (metric) {
      const double h = metric_entropy_partial(fm, n);
      point["metric"] = h;
      if (cfg.format == "tsv") std::cout << "\t" << tsv_number(h);
    }
    if (topological) {
      const double h = topological_entropy_partial(fm, n);
      point["topological"] = h;
      if (cfg.format == "tsv") std::cout << "\t" << tsv_number(h);
    }
    if (cfg.format == "tsv") std::cout << "\n";
    points.push_back(point);
  }
  json doc{{"flavor", cfg.flavor}, {"points", points}};
  if (cfg.class_check) {
    const auto report = max_entropy_class_check(rule, cfg.max_n, guards);
    json r{{"qualifies", report.qualifies}};
    if (!report.qualifies) r["reason"] = report.reason;
    else {
      r["N"] = report.image_length;
      r["images"] = report.image_count;
      r["uniform"] = report.uniform;
      if (report.predicted) r["predicted"] = *report.predicted;
      if (report.compared_n) {
        r["compared_n"] = *report.compared_n;
        r["metric"] = *report.metric;
        r["topological"] = *report.topological;
      }
    }
    doc["max_entropy_class"] = r;
    if (cfg.format == "tsv") {
      std::cout << "# max-entropy class: " << (report.qualifies ? "qualifies" : "does not qualify");
      if (!report.qualifies) std::cout << " (" << report.reason << ")";
      if (report.predicted) std::cout << ", predicted h = " << tsv_number(*report.predicted);
      std::cout << "\n";
    }
  }
  if (cfg.format == "json") emit(doc);
  return 0;
}

int cmd_sample(const RunConfig& cfg, const SubstitutionRule& rule, const Guards& guards) {
  const Letter a = resolve_letter(rule, cfg.letter);
  SamplerOptions options{cfg.threads, guards};
  const std::string letter = rule.alphabet().symbol(a);
  auto stats_json = [&](const SampleStats& s) {
    return json{{"estimate", s.estimate}, {"stderr", s.standard_error}, {"trials", s.trials},
                {"n", s.n}, {"seed", s.seed}};
  };
  auto stats_tsv = [&](const SampleStats& s) {
    std::cout << "estimate\tstderr\ttrials\tn\tseed\n"
              << tsv_number(s.estimate) << "\t" << tsv_number(s.standard_error) << "\t" << s.trials
              << "\t" << s.n << "\t" << s.seed << "\n";
  };

  if (cfg.word) {
    const Word v = parse_word(*cfg.word, rule.alphabet());
    const auto s = empirical_frequency(rule, a, v, cfg.n, cfg.trials, cfg.seed, options);
    if (cfg.format == "json") {
      auto doc = stats_json(s);
      doc["mode"] = "frequency";
      doc["letter"] = letter;
      doc["word"] = *cfg.word;
      emit(doc);
    } else {
      stats_tsv(s);
    }
  } else if (cfg.tail_k) {
    const auto s = length_tail(rule, a, cfg.n, *cfg.tail_k, cfg.trials, cfg.seed, options);
    if (cfg.format == "json") {
      auto doc = stats_json(s);
      doc["mode"] = "tail";
      doc["letter"] = letter;
      doc["K"] = *cfg.tail_k;
      emit(doc);
    } else {
      stats_tsv(s);
    }
  } else if (cfg.direction) {
    const auto d = gw_direction_estimate(rule, a, cfg.n, cfg.trials, cfg.seed, options);
    if (cfg.format == "json") {
      emit({{"mode", "direction"}, {"letter", letter}, {"n", d.n}, {"trials", d.trials},
            {"seed", d.seed}, {"lambda", d.lambda}, {"reference", d.reference},
            {"max_distance", d.max_distance}, {"mean_distance", d.mean_distance},
            {"mean_magnitude", d.mean_magnitude},
            {"magnitude_stderr", d.magnitude_standard_error}});
    } else {
      std::cout << "max_distance\tmean_distance\tmean_magnitude\tmagnitude_stderr\n"
                << tsv_number(d.max_distance) << "\t" << tsv_number(d.mean_distance) << "\t"
                << tsv_number(d.mean_magnitude) << "\t" << tsv_number(d.magnitude_standard_error)
                << "\n";
    }
  } else {
    const ImageSampler sampler(rule);
    json words = json::array();
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      Engine engine(trial_seed(cfg.seed, i));
      const Word w = sample_iterate_with(rule, sampler, Word{a}, cfg.n, engine, guards);
      const auto text = format_word(w, rule.alphabet());
      if (cfg.format == "json")
        words.push_back(text);
      else
        std::cout << text << "\n";
    }
    if (cfg.format == "json")
      emit({{"mode", "words"}, {"letter", letter}, {"n", cfg.n}, {"seed", cfg.seed}, {"words", words}});
  }
  return 0;
}

int cmd_check(const RunConfig& cfg, const SubstitutionRule& rule, const Guards& guards) {
  CheckOptions options;
  options.max_ell = cfg.max_ell;
  options.guards = guards;
  const auto results = run_checks(rule, options);
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (cfg.format == "json")
      rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      std::cout << (r.passed ? "PASS" : "FAIL") << "\t" << r.name << "\t" << r.detail << "\n";
  }
  if (cfg.format == "json") emit({{"checks", rows}, {"passed", all}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random substitutions: languages, induced matrices, frequency measures, "
               "sampling and entropy"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", cfg.config_path, "Rule file (JSON)")->required();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--seed", cfg.seed, "Base seed");
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  };

  auto* language = app.add_subcommand("language", "Legal words of length l, one per line");
  common(language);
  language->add_option("--ell", cfg.ell, "Word length")->required()->check(CLI::PositiveNumber);

  auto* matrix = app.add_subcommand("matrix", "Mean matrix of the l-induced substitution");
  common(matrix);
  matrix->add_option("--ell", cfg.ell, "Window length")->check(CLI::PositiveNumber);

  auto* freqs = app.add_subcommand("freqs", "Frequency measure of cylinder sets");
  common(freqs);
  freqs->add_option("--ell", cfg.ell, "Word length")->check(CLI::PositiveNumber);
  freqs->add_option("--word", cfg.word, "Single word to evaluate");

  auto* entropy = app.add_subcommand("entropy", "Metric and topological entropy partial sums");
  common(entropy);
  entropy->add_option("--max-n", cfg.max_n, "Largest word length")->check(CLI::PositiveNumber);
  entropy->add_option("--flavor", cfg.flavor, "metric, topological or both");
  entropy->add_flag("--class-check", cfg.class_check, "Report the maximal-entropy class check");

  auto* sample = app.add_subcommand("sample", "Monte-Carlo sampling of theta^n(letter)");
  common(sample);
  sample->add_option("--letter", cfg.letter, "Start letter (default: first letter)");
  sample->add_option("--n", cfg.n, "Number of substitution rounds");
  sample->add_option("--trials", cfg.trials, "Independent trials")->check(CLI::PositiveNumber);
  sample->add_option("--word", cfg.word, "Estimate the frequency of this word");
  sample->add_option("--tail-K", cfg.tail_k, "Estimate P[|theta^n(a)| < K n]");
  sample->add_flag("--direction", cfg.direction, "Compare Phi(theta^n(a))/|theta^n(a)| with R");

  auto* check = app.add_subcommand("check", "Run the invariant suite on a rule");
  common(check);
  check->add_option("--max-ell", cfg.max_ell, "Largest window length")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (freqs->parsed() && cfg.word && freqs->count("--ell") > 0 &&
        cfg.word->size() != cfg.ell)
      std::cerr << "note: --ell is ignored when --word is given\n";
    const Guards guards = Guards::from_environment();
    const SubstitutionRule rule = load_rule(cfg.config_path);
    if (language->parsed()) return cmd_language(cfg, rule, guards);
    if (matrix->parsed()) return cmd_matrix(cfg, rule, guards);
    if (freqs->parsed()) return cmd_freqs(cfg, rule, guards);
    if (entropy->parsed()) return cmd_entropy(cfg, rule, guards);
    if (sample->parsed()) return cmd_sample(cfg, rule, guards);
    if (check->parsed()) return cmd_check(cfg, rule, guards);
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const GuardExceeded& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
