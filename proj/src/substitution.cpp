#include "stochsub/substitution.hpp"

#include <algorithm>
#include <set>

#include "stochsub/error.hpp"

namespace stochsub {

Rational SubstitutionRule::image_probability(Letter a, const Word& w) const {
  for (const auto& opt : images(a))
    if (opt.word == w) return opt.prob;
  return 0;
}

Rational SubstitutionRule::expected_image_length(Letter a) const {
  Rational sum = 0;
  for (const auto& opt : images(a)) sum += opt.prob * static_cast<unsigned long>(opt.word.size());
  return sum;
}

std::size_t SubstitutionRule::max_image_length() const {
  std::size_t m = 0;
  for (const auto& options : images_)
    for (const auto& opt : options) m = std::max(m, opt.word.size());
  return m;
}

std::size_t SubstitutionRule::min_image_length() const {
  std::size_t m = static_cast<std::size_t>(-1);
  for (const auto& options : images_)
    for (const auto& opt : options) m = std::min(m, opt.word.size());
  return m;
}

bool SubstitutionRule::is_deterministic() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const auto& options) { return options.size() == 1; });
}

bool SubstitutionRule::same_supports(const SubstitutionRule& other) const {
  if (!(alphabet_ == other.alphabet_)) return false;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    std::set<Word> mine, theirs;
    for (const auto& opt : images_[a]) mine.insert(opt.word);
    for (const auto& opt : other.images_[a]) theirs.insert(opt.word);
    if (mine != theirs) return false;
  }
  return true;
}

SubstitutionRule validate_rule(const RawRule& raw) {
  std::vector<std::string> problems;
  Alphabet alphabet;
  try {
    alphabet = Alphabet(raw.alphabet);
  } catch (const Error& e) {
    throw ValidationError({e.what()});
  }

  std::vector<std::vector<ImageOption>> images(alphabet.size());
  std::vector<bool> seen(alphabet.size(), false);
  for (const auto& [symbol, options] : raw.rules) {
    const auto letter = alphabet.find(symbol);
    if (!letter) {
      problems.push_back("rule given for unknown letter '" + symbol + "'");
      continue;
    }
    if (seen[*letter]) {
      problems.push_back("letter '" + symbol + "': more than one rule");
      continue;
    }
    seen[*letter] = true;
    if (options.empty()) problems.push_back("letter '" + symbol + "': no images");

    Rational sum = 0;
    bool sum_valid = true;
    std::set<Word> support;
    for (const auto& opt : options) {
      const std::string where = "letter '" + symbol + "', image '" + opt.word + "'";
      bool ok = true;
      Word word;
      if (opt.word.empty()) {
        problems.push_back(where + ": empty image word");
        ok = false;
      } else {
        try {
          word = parse_word(opt.word, alphabet);
        } catch (const Error&) {
          problems.push_back(where + ": unknown letter in image");
          ok = false;
        }
      }
      Rational prob;
      try {
        prob = parse_rational(opt.prob);
      } catch (const Error& e) {
        problems.push_back(where + ": " + e.what());
        sum_valid = false;
        continue;
      }
      if (sgn(prob) == 0) {
        problems.push_back(where + ": zero probability");
        ok = false;
      } else if (sgn(prob) < 0 || prob > 1) {
        problems.push_back(where + ": probability " + format_rational(prob) +
                           " outside (0,1]");
        ok = false;
      }
      sum += prob;
      if (ok && !support.insert(word).second) {
        problems.push_back(where + ": duplicate image in support");
        ok = false;
      }
      if (ok) images[*letter].push_back({std::move(word), prob});
    }
    if (sum_valid && !options.empty() && sum != 1)
      problems.push_back("letter '" + symbol + "': probabilities sum to " +
                         format_rational(sum) + ", not 1");
  }
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    if (!seen[a])
      problems.push_back("letter '" + alphabet.symbol(static_cast<Letter>(a)) +
                         "': missing image distribution");

  if (!problems.empty()) throw ValidationError(std::move(problems));
  return SubstitutionRule(std::move(alphabet), std::move(images));
}

RawRule to_raw(const SubstitutionRule& rule) {
  RawRule raw;
  raw.alphabet = rule.alphabet().symbols();
  for (std::size_t a = 0; a < rule.size(); ++a) {
    std::vector<RawImage> options;
    for (const auto& opt : rule.images(static_cast<Letter>(a)))
      options.push_back({format_word(opt.word, rule.alphabet()), format_rational(opt.prob)});
    raw.rules.emplace_back(raw.alphabet[a], std::move(options));
  }
  return raw;
}

SubstitutionRule reweight(const SubstitutionRule& rule,
                          const std::vector<std::vector<Rational>>& probs) {
  if (probs.size() != rule.size()) throw Error("reweight: one probability vector per letter");
  RawRule raw = to_raw(rule);
  for (std::size_t a = 0; a < rule.size(); ++a) {
    auto& options = raw.rules[a].second;
    if (probs[a].size() != options.size())
      throw Error("reweight: probability vector size differs from the support of letter '" +
                  raw.alphabet[a] + "'");
    for (std::size_t j = 0; j < options.size(); ++j) options[j].prob = format_rational(probs[a][j]);
  }
  return validate_rule(raw);
}

Rational IterateDistribution::probability(const Word& w) const {
  const auto it = entries.find(w);
  return it == entries.end() ? Rational(0) : it->second;
}

Rational IterateDistribution::total() const {
  Rational sum = 0;
  for (const auto& [w, p] : entries) sum += p;
  return sum;
}

Rational kernel(const SubstitutionRule& rule, const Word& u, const Word& v) {
  if (u.empty()) throw Error("kernel: source word must be nonempty");
  // reach[j]: probability that the letters processed so far produce v_{[1,j]}.
  std::vector<Rational> reach(v.size() + 1, 0);
  reach[0] = 1;
  for (Letter a : u) {
    std::vector<Rational> next(v.size() + 1, 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(reach[j]) == 0) continue;
      for (const auto& opt : rule.images(a)) {
        const auto& w = opt.word;
        if (j + w.size() > v.size()) continue;
        if (std::equal(w.begin(), w.end(), v.begin() + j)) next[j + w.size()] += reach[j] * opt.prob;
      }
    }
    reach = std::move(next);
  }
  return reach[v.size()];
}

std::map<Word, Rational> image_distribution(const SubstitutionRule& rule, const Word& u,
                                            const Guards& guards) {
  std::map<Word, Rational> current{{Word{}, Rational(1)}};
  for (Letter a : u) {
    std::map<Word, Rational> next;
    for (const auto& [prefix, p] : current)
      for (const auto& opt : rule.images(a)) {
        next[prefix + opt.word] += p * opt.prob;
        if (next.size() > guards.support_limit)
          throw GuardExceeded("image distribution support exceeds " +
                              std::to_string(guards.support_limit) + " words");
      }
    current = std::move(next);
  }
  return current;
}

IterateDistribution iterate_distribution(const SubstitutionRule& rule, const Word& u,
                                         std::size_t n, const Guards& guards) {
  IterateDistribution dist;
  dist.n = n;
  dist.source = u;
  dist.entries[u] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::map<Word, Rational> next;
    for (const auto& [w, p] : dist.entries) {
      for (const auto& [image, q] : image_distribution(rule, w, guards)) {
        next[image] += p * q;
        if (next.size() > guards.support_limit)
          throw GuardExceeded("iterate distribution support exceeds " +
                              std::to_string(guards.support_limit) + " words at n=" +
                              std::to_string(step + 1));
      }
    }
    dist.entries = std::move(next);
  }
  return dist;
}

LabeledMatrix mean_matrix(const SubstitutionRule& rule) {
  const std::size_t m = rule.size();
  LabeledMatrix out;
  out.values = RationalMatrix(m);
  for (std::size_t a = 0; a < m; ++a) out.labels.push_back(Word{static_cast<Letter>(a)});
  for (std::size_t b = 0; b < m; ++b)
    for (const auto& opt : rule.images(static_cast<Letter>(b))) {
      const auto counts = abelianise(opt.word, m);
      for (std::size_t a = 0; a < m; ++a)
        if (counts[a] != 0) out.values(a, b) += opt.prob * static_cast<unsigned long>(counts[a]);
    }
  return out;
}

Primitivity is_primitive(const SubstitutionRule& rule) {
  const int k = primitivity_exponent(mean_matrix(rule).values);
  return {k > 0, k};
}

bool is_expanding(const SubstitutionRule& rule) { return rule.max_image_length() > 1; }

}  // namespace stochsub
