#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stochsub/guards.hpp"
#include "stochsub/substitution.hpp"
#include "stochsub/words.hpp"

namespace stochsub {

// Legal words of every length 1..max_length(), each length sorted
// lexicographically by letter code.
class LanguageTable {
 public:
  LanguageTable() = default;
  explicit LanguageTable(std::vector<std::vector<Word>> by_length);

  std::size_t max_length() const { return by_length_.size(); }
  const std::vector<Word>& words(std::size_t ell) const;
  std::optional<std::size_t> index_of(const Word& w) const;
  bool contains(const Word& w) const { return index_of(w).has_value(); }

 private:
  std::vector<std::vector<Word>> by_length_;
  std::vector<std::unordered_map<Word, std::size_t, WordHash>> index_;
};

// Builds the legal words of lengths up to max_length from the multi-valued
// substitution. Requires a primitive rule (throws NotPrimitive).
//
// The closure S starts from the letters and adds, for every s in S, each
// max_length-window of every realisation of theta(s) (or the whole
// realisation when it is shorter). Every legal word of length <= max_length
// is a subword of some element of S.
LanguageTable build_language(const SubstitutionRule& rule, std::size_t max_length,
                             const Guards& guards = Guards::defaults());

std::vector<Word> legal_words(const SubstitutionRule& rule, std::size_t ell,
                              const Guards& guards = Guards::defaults());

// Sequence of l-windows of one underlying word; consecutive entries overlap
// in l-1 letters.
struct CollaredWord {
  std::size_t ell = 0;
  std::vector<Word> windows;
};

CollaredWord collar(const Word& u, std::size_t ell);

}  // namespace stochsub
