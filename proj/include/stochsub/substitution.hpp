#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stochsub/guards.hpp"
#include "stochsub/matrix.hpp"
#include "stochsub/rational.hpp"
#include "stochsub/words.hpp"

namespace stochsub {

// Unvalidated rule data as it comes out of a config file.
struct RawImage {
  std::string word;
  std::string prob;
};

struct RawRule {
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, std::vector<RawImage>>> rules;
};

struct ImageOption {
  Word word;
  Rational prob;
};

// Validated random substitution rule: for every letter a finite distribution
// over nonempty image words with exact probabilities summing to one.
class SubstitutionRule {
 public:
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  std::span<const ImageOption> images(Letter a) const { return images_.at(a); }

  // Probability that letter a maps to w (zero outside the support).
  Rational image_probability(Letter a, const Word& w) const;
  // E|theta(a)|.
  Rational expected_image_length(Letter a) const;
  std::size_t max_image_length() const;
  std::size_t min_image_length() const;
  bool is_deterministic() const;

  // Same alphabet and same image supports for every letter.
  bool same_supports(const SubstitutionRule& other) const;

  friend SubstitutionRule validate_rule(const RawRule& raw);

 private:
  SubstitutionRule(Alphabet alphabet, std::vector<std::vector<ImageOption>> images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {}

  Alphabet alphabet_;
  std::vector<std::vector<ImageOption>> images_;
};

// Checks every rule invariant and throws ValidationError listing all of the
// violations found.
SubstitutionRule validate_rule(const RawRule& raw);

// Inverse of validate_rule, with probabilities written as "num/den".
RawRule to_raw(const SubstitutionRule& rule);

// Same supports with new probability vectors; probs[a][j] replaces the
// probability of the j-th image of letter a. The result is re-validated.
SubstitutionRule reweight(const SubstitutionRule& rule,
                          const std::vector<std::vector<Rational>>& probs);

// Law of theta^n(source), i.e. P^n(source, .).
struct IterateDistribution {
  std::size_t n = 0;
  Word source;
  std::map<Word, Rational> entries;

  Rational probability(const Word& w) const;
  Rational total() const;
};

// P(u, v): sum over decompositions v = v^1...v^m of prod_j P_{u_j}(v^j).
Rational kernel(const SubstitutionRule& rule, const Word& u, const Word& v);

// Law of theta(u) for a single application.
std::map<Word, Rational> image_distribution(const SubstitutionRule& rule, const Word& u,
                                            const Guards& guards = Guards::defaults());

IterateDistribution iterate_distribution(const SubstitutionRule& rule, const Word& u,
                                         std::size_t n,
                                         const Guards& guards = Guards::defaults());

// (M)_{ab} = E|theta(b)|_a, labelled by the single letters.
LabeledMatrix mean_matrix(const SubstitutionRule& rule);

struct Primitivity {
  bool primitive = false;
  // Smallest k with M^k strictly positive; 0 when not primitive.
  int exponent = 0;
};

Primitivity is_primitive(const SubstitutionRule& rule);

// Some image word has length > 1.
bool is_expanding(const SubstitutionRule& rule);

}  // namespace stochsub
