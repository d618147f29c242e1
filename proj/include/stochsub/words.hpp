#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stochsub {

// Interned letter code: position of the symbol in the alphabet.
using Letter = std::uint8_t;

// Ordered finite alphabet. Symbols are interned to their declaration index,
// and that index order is the lexicographic order used everywhere else.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Letter> find(std::string_view symbol) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

// Finite word over an interned alphabet. Immutable value type.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // u_{[k,m]} with 1-based inclusive bounds, 1 <= k <= m <= |u|.
  Word slice(std::size_t k, std::size_t m) const;
  // Zero-based window of the given length.
  Word window(std::size_t start, std::size_t length) const;

  Word operator+(const Word& other) const;

  bool operator==(const Word&) const = default;
  // Lexicographic by letter code.
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Number of (possibly overlapping) occurrences of v in u; 0 when |v| > |u|.
std::size_t count_occurrences(std::span<const Letter> u, std::span<const Letter> v);
inline std::size_t count_occurrences(const Word& u, const Word& v) {
  return count_occurrences(u.letters(), v.letters());
}

// Letter counts of u indexed by letter code. Rejects the empty word.
std::vector<std::uint64_t> abelianise(const Word& u, std::size_t alphabet_size);
std::vector<std::uint64_t> abelianise(std::span<const Letter> u, std::size_t alphabet_size);

// Split text into letters by greedy longest match against the alphabet.
// Throws stochsub::Error when some part of the text is not a symbol.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace stochsub
