#include "stochsub/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "stochsub/entropy.hpp"
#include "stochsub/error.hpp"
#include "stochsub/induced.hpp"
#include "stochsub/language.hpp"
#include "stochsub/measure.hpp"

namespace stochsub {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

class Runner {
 public:
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, true, {}};
    try {
      r.detail = body();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

// E Phi(theta^n(a)) from the exact law, compared with M^n e_a.
std::string expected_abelianisation(const SubstitutionRule& rule, std::size_t max_n,
                                    const Guards& guards) {
  const auto m = mean_matrix(rule).values;
  const std::size_t k = rule.size();
  std::size_t checked = 0;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Rational> power(k, 0);
    power[a] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::vector<Rational> next(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += m(i, j) * power[j];
      power = std::move(next);
      IterateDistribution dist;
      try {
        dist = iterate_distribution(rule, Word{static_cast<Letter>(a)}, n, guards);
      } catch (const GuardExceeded&) {
        break;
      }
      std::vector<Rational> expectation(k, 0);
      for (const auto& [w, p] : dist.entries) {
        const auto phi = abelianise(w, k);
        for (std::size_t i = 0; i < k; ++i) expectation[i] += p * static_cast<unsigned long>(phi[i]);
      }
      expect(expectation == power, "E Phi(theta^n(a)) differs from M^n e_a");
      ++checked;
    }
  }
  return std::to_string(checked) + " (letter, n) pairs exact";
}

}  // namespace

std::vector<CheckResult> run_checks(const SubstitutionRule& rule, const CheckOptions& options) {
  Runner runner;
  const auto& guards = options.guards;
  Guards iterate_guards = guards;
  iterate_guards.support_limit = std::min(guards.support_limit, options.iterate_support);
  const std::size_t k = rule.size();
  const auto prim = is_primitive(rule);
  const bool expanding = is_expanding(rule);

  runner.run("primitive", [&] {
    expect(prim.primitive, "mean matrix is not primitive");
    return "witness exponent " + std::to_string(prim.exponent);
  });
  if (!prim.primitive) return runner.results;

  runner.run("kernel normalisation", [&] {
    std::size_t sources = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        const Word u{static_cast<Letter>(a), static_cast<Letter>(b)};
        Rational total = 0;
        for (const auto& [v, p] : image_distribution(rule, u, iterate_guards)) {
          const Rational q = kernel(rule, u, v);
          expect(q == p, "kernel disagrees with the image law");
          total += q;
        }
        expect(total == 1, "kernel(u, .) does not sum to 1");
        ++sources;
      }
    return std::to_string(sources) + " two-letter sources sum to 1 exactly";
  });

  runner.run("Chapman-Kolmogorov", [&] {
    std::size_t checked = 0;
    for (std::size_t a = 0; a < k; ++a) {
      const Word u{static_cast<Letter>(a)};
      for (std::size_t n = 0; n < options.max_iterate; ++n) {
        IterateDistribution now, next;
        try {
          now = iterate_distribution(rule, u, n, iterate_guards);
          next = iterate_distribution(rule, u, n + 1, iterate_guards);
        } catch (const GuardExceeded&) {
          break;
        }
        expect(next.total() == 1, "iterate law does not sum to 1");
        for (const auto& [v, p] : next.entries) {
          Rational composed = 0;
          for (const auto& [w, q] : now.entries) composed += q * kernel(rule, w, v);
          expect(composed == p, "P^{n+1} differs from P^n P");
        }
        ++checked;
      }
    }
    return std::to_string(checked) + " (letter, n) pairs exact";
  });

  runner.run("mean matrix column sums", [&] {
    const auto m = mean_matrix(rule).values;
    for (std::size_t b = 0; b < k; ++b) {
      Rational sum = 0;
      for (std::size_t a = 0; a < k; ++a) sum += m(a, b);
      expect(sum == rule.expected_image_length(static_cast<Letter>(b)),
             "column sum differs from E|theta(b)|");
    }
    return std::string("exact");
  });

  runner.run("conditional expectation", [&] {
    return expected_abelianisation(rule, options.max_iterate + 1, iterate_guards);
  });

  runner.run("expanding iff lambda > 1", [&] {
    const double lambda = pf_eigenpair(mean_matrix(rule).values).lambda;
    const bool big = lambda > 1.0 + 1e-12;
    expect(big == expanding, "expanding flag disagrees with the PF eigenvalue");
    return "lambda = " + std::to_string(lambda);
  });

  const std::size_t max_ell = expanding ? options.max_ell : 1;
  LanguageTable table;
  runner.run("language closure", [&] {
    table = build_language(rule, max_ell + 1, guards);
    for (std::size_t ell = 2; ell <= max_ell + 1; ++ell)
      for (const auto& u : table.words(ell)) {
        expect(table.contains(u.slice(1, ell - 1)) && table.contains(u.slice(2, ell)),
               "prefix or suffix of a legal word is not legal");
      }
    for (std::size_t ell = 1; ell <= max_ell; ++ell)
      for (const auto& u : table.words(ell))
        for (const auto& [image, p] : image_distribution(rule, u, guards))
          for (std::size_t s = 0; s + ell <= image.size(); ++s)
            expect(table.contains(image.window(s, ell)), "language not invariant under theta");
    std::string sizes;
    for (std::size_t ell = 1; ell <= max_ell; ++ell)
      sizes += (ell > 1 ? "," : "") + std::to_string(table.words(ell).size());
    return "card L^l for l=1..: " + sizes;
  });

  FrequencyMeasure fm(rule, guards);
  runner.run("induced column sums", [&] {
    for (std::size_t ell = 1; ell <= max_ell; ++ell) {
      const auto induced = induced_mean_matrix(rule, ell, table, guards);
      for (std::size_t col = 0; col < induced.size(); ++col) {
        Rational sum = 0;
        for (std::size_t row = 0; row < induced.size(); ++row) sum += induced.values(row, col);
        expect(sum == rule.expected_image_length(induced.labels[col][0]),
               "induced column sum differs from E|theta(u_1)|");
      }
      expect(primitivity_exponent(induced.values) > 0, "induced matrix is not primitive");
    }
    return "exact for l <= " + std::to_string(max_ell);
  });

  runner.run("spectral coincidence", [&] {
    const auto& base = fm.level(1);
    double worst_lambda = 0.0, worst_left = 0.0;
    for (std::size_t ell = 1; ell <= max_ell; ++ell) {
      const auto& level = fm.level(ell);
      worst_lambda = std::max(worst_lambda, std::abs(level.eigen.lambda - base.eigen.lambda));
      for (std::size_t i = 0; i < level.words.size(); ++i)
        worst_left = std::max(worst_left,
                              std::abs(level.eigen.left[i] - base.eigen.left[level.words[i][0]]));
    }
    expect(worst_lambda <= 1e-9, "induced PF eigenvalue differs: " + fmt(worst_lambda));
    expect(worst_left <= 1e-9, "left eigenvector does not collapse: " + fmt(worst_left));
    return "max |dlambda| " + fmt(worst_lambda) + ", max |L_u - L_u1| " + fmt(worst_left);
  });

  runner.run("measure normalisation and additivity", [&] {
    double worst = 0.0;
    for (std::size_t ell = 1; ell <= max_ell; ++ell) {
      double sum = 0.0;
      for (double r : fm.level(ell).eigen.right) sum += r;
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    expect(worst <= 1e-9, "sum of R^(l) differs from 1 by " + fmt(worst));
    double additivity = 0.0;
    for (std::size_t ell = 1; ell < max_ell; ++ell) {
      const auto& coarse = fm.level(ell);
      for (std::size_t i = 0; i < coarse.words.size(); ++i) {
        double right = 0.0, left = 0.0;
        for (std::size_t a = 0; a < k; ++a) {
          const Word letter{static_cast<Letter>(a)};
          right += cylinder_measure(fm, coarse.words[i] + letter).value;
          left += cylinder_measure(fm, letter + coarse.words[i]).value;
        }
        additivity = std::max({additivity, std::abs(right - coarse.eigen.right[i]),
                               std::abs(left - coarse.eigen.right[i])});
      }
    }
    expect(additivity <= 1e-9, "one-letter extensions do not add up: " + fmt(additivity));
    return "normalisation " + fmt(worst) + ", additivity " + fmt(additivity);
  });

  runner.run("consistency identity", [&] {
    double worst = 0.0;
    for (std::size_t ell = 1; ell <= max_ell; ++ell)
      for (std::size_t ell0 = 1; ell0 <= ell; ++ell0)
        worst = std::max(worst, consistency_residual(fm, ell0, ell));
    expect(worst <= 1e-9, "consistency residual " + fmt(worst));
    return "max residual " + fmt(worst);
  });

  runner.run("metric <= topological entropy", [&] {
    for (std::size_t n = 1; n <= max_ell; ++n)
      expect(metric_entropy_partial(fm, n) <= topological_entropy_partial(fm, n) + 1e-9,
             "metric partial sum exceeds the topological one at n=" + std::to_string(n));
    return "n <= " + std::to_string(max_ell);
  });

  return runner.results;
}

}  // namespace stochsub
