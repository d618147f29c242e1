#include "stochsub/words.hpp"

#include <algorithm>
#include <limits>

#include "stochsub/error.hpp"

namespace stochsub {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error("alphabet must not be empty");
  if (symbols_.size() > std::numeric_limits<Letter>::max())
    throw Error("alphabet has more than 255 symbols");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw Error("alphabet symbols must be nonempty");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[i] == symbols_[j])
        throw Error("duplicate alphabet symbol '" + symbols_[i] + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return static_cast<Letter>(i);
  return std::nullopt;
}

Word Word::slice(std::size_t k, std::size_t m) const {
  if (k < 1 || k > m || m > letters_.size())
    throw Error("word slice [" + std::to_string(k) + "," + std::to_string(m) +
                "] out of range for length " + std::to_string(letters_.size()));
  return Word(std::vector<Letter>(letters_.begin() + (k - 1), letters_.begin() + m));
}

Word Word::window(std::size_t start, std::size_t length) const {
  return slice(start + 1, start + length);
}

Word Word::operator+(const Word& other) const {
  std::vector<Letter> out;
  out.reserve(size() + other.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letter codes.
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter a : w) {
    h ^= a;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t count_occurrences(std::span<const Letter> u, std::span<const Letter> v) {
  if (v.empty() || v.size() > u.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + v.size() <= u.size(); ++i)
    if (std::equal(v.begin(), v.end(), u.begin() + i)) ++count;
  return count;
}

std::vector<std::uint64_t> abelianise(std::span<const Letter> u, std::size_t alphabet_size) {
  if (u.empty()) throw Error("cannot abelianise the empty word");
  std::vector<std::uint64_t> counts(alphabet_size, 0);
  for (Letter a : u) {
    if (a >= alphabet_size) throw Error("letter code outside the alphabet");
    ++counts[a];
  }
  return counts;
}

std::vector<std::uint64_t> abelianise(const Word& u, std::size_t alphabet_size) {
  return abelianise(u.letters(), alphabet_size);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      const auto& s = alphabet.symbol(static_cast<Letter>(i));
      if (s.size() > best_len && text.substr(pos, s.size()) == s) {
        best_len = s.size();
        best = static_cast<Letter>(i);
      }
    }
    if (best_len == 0)
      throw Error("word '" + std::string(text) + "' contains an unknown letter at offset " +
                  std::to_string(pos));
    out.push_back(best);
    pos += best_len;
  }
  return Word(std::move(out));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (Letter a : w) out += alphabet.symbol(a);
  return out;
}

}  // namespace stochsub
