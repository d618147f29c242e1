#include "stochsub/language.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "stochsub/error.hpp"

namespace stochsub {

LanguageTable::LanguageTable(std::vector<std::vector<Word>> by_length)
    : by_length_(std::move(by_length)) {
  index_.resize(by_length_.size());
  for (std::size_t i = 0; i < by_length_.size(); ++i) {
    auto& words = by_length_[i];
    std::sort(words.begin(), words.end());
    for (std::size_t j = 0; j < words.size(); ++j) index_[i].emplace(words[j], j);
  }
}

const std::vector<Word>& LanguageTable::words(std::size_t ell) const {
  if (ell < 1 || ell > by_length_.size())
    throw Error("language table holds lengths 1.." + std::to_string(by_length_.size()) +
                ", requested " + std::to_string(ell));
  return by_length_[ell - 1];
}

std::optional<std::size_t> LanguageTable::index_of(const Word& w) const {
  if (w.empty() || w.size() > by_length_.size()) return std::nullopt;
  const auto& idx = index_[w.size() - 1];
  const auto it = idx.find(w);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

namespace {

class Closure {
 public:
  Closure(const SubstitutionRule& rule, std::size_t width, const Guards& guards)
      : rule_(rule), width_(width), guards_(guards) {}

  std::unordered_set<Word, WordHash> run() {
    for (std::size_t a = 0; a < rule_.size(); ++a) add(Word{static_cast<Letter>(a)});
    while (!queue_.empty()) {
      const Word s = std::move(queue_.front());
      queue_.pop_front();
      expand(s);
    }
    return std::move(found_);
  }

 private:
  void add(Word w) {
    if (found_.insert(w).second) {
      if (found_.size() > guards_.language_limit)
        throw GuardExceeded("language closure exceeds " +
                            std::to_string(guards_.language_limit) + " words");
      queue_.push_back(std::move(w));
    }
  }

  // Windows starting inside the image of s_i only depend on the images of
  // s_i, s_{i+1}, ... up to the first point where width letters past the
  // start of the last window are known.
  void expand(const Word& s) {
    leaves_ = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (const auto& opt : rule_.images(s[i])) {
        buffer_.assign(opt.word.begin(), opt.word.end());
        descend(s, i, i + 1, opt.word.size());
      }
    }
  }

  void descend(const Word& s, std::size_t first, std::size_t next, std::size_t first_len) {
    const std::size_t need = first_len + width_ - 1;
    if (buffer_.size() >= need || next == s.size()) {
      if (++leaves_ > guards_.enumeration_limit)
        throw GuardExceeded("language closure enumerates more than " +
                            std::to_string(guards_.enumeration_limit) + " realisations per word");
      for (std::size_t off = 0; off < first_len && off + width_ <= buffer_.size(); ++off)
        add(Word(std::vector<Letter>(buffer_.begin() + off, buffer_.begin() + off + width_)));
      if (first == 0 && next == s.size() && buffer_.size() < width_) add(Word(buffer_));
      return;
    }
    const std::size_t mark = buffer_.size();
    for (const auto& opt : rule_.images(s[next])) {
      buffer_.insert(buffer_.end(), opt.word.begin(), opt.word.end());
      descend(s, first, next + 1, first_len);
      buffer_.resize(mark);
    }
  }

  const SubstitutionRule& rule_;
  std::size_t width_;
  const Guards& guards_;
  std::unordered_set<Word, WordHash> found_;
  std::deque<Word> queue_;
  std::vector<Letter> buffer_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

LanguageTable build_language(const SubstitutionRule& rule, std::size_t max_length,
                             const Guards& guards) {
  if (max_length < 1) throw Error("language: word length must be at least 1");
  if (!is_primitive(rule).primitive)
    throw NotPrimitive("language enumeration requires a primitive rule");

  const auto closure = Closure(rule, max_length, guards).run();

  std::vector<std::unordered_set<Word, WordHash>> sets(max_length);
  for (const auto& w : closure)
    for (std::size_t len = 1; len <= std::min(max_length, w.size()); ++len)
      for (std::size_t start = 0; start + len <= w.size(); ++start) {
        auto& bucket = sets[len - 1];
        bucket.insert(w.window(start, len));
        if (bucket.size() > guards.language_limit)
          throw GuardExceeded("more than " + std::to_string(guards.language_limit) +
                              " legal words of length " + std::to_string(len));
      }

  std::vector<std::vector<Word>> by_length(max_length);
  for (std::size_t i = 0; i < max_length; ++i)
    by_length[i].assign(sets[i].begin(), sets[i].end());
  return LanguageTable(std::move(by_length));
}

std::vector<Word> legal_words(const SubstitutionRule& rule, std::size_t ell,
                              const Guards& guards) {
  return build_language(rule, ell, guards).words(ell);
}

CollaredWord collar(const Word& u, std::size_t ell) {
  if (ell < 1) throw Error("collar: window length must be at least 1");
  if (u.size() < ell)
    throw Error("collar: word of length " + std::to_string(u.size()) +
                " is shorter than the window length " + std::to_string(ell));
  CollaredWord out{ell, {}};
  out.windows.reserve(u.size() - ell + 1);
  for (std::size_t k = 0; k + ell <= u.size(); ++k) out.windows.push_back(u.window(k, ell));
  return out;
}

}  // namespace stochsub
