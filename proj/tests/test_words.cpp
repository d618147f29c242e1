#include "doctest.h"

#include <random>

#include "stochsub/error.hpp"
#include "stochsub/words.hpp"

using namespace stochsub;

namespace {

const Alphabet ab({"a", "b"});

Word w(const char* s) { return parse_word(s, ab); }

// Naive counter used as the oracle for random inputs.
std::size_t naive_count(const Word& u, const Word& v) {
  if (v.empty() || v.size() > u.size()) return 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i + v.size() <= u.size(); ++i) {
    bool same = true;
    for (std::size_t j = 0; j < v.size(); ++j) same = same && u[i + j] == v[j];
    c += same;
  }
  return c;
}

}  // namespace

TEST_CASE("occurrence counts overlap") {
  CHECK(count_occurrences(w("aaaa"), w("aa")) == 3);
  CHECK(count_occurrences(w("abab"), w("ab")) == 2);
  CHECK(count_occurrences(w("abab"), w("bab")) == 1);
  CHECK(count_occurrences(w("ab"), w("abab")) == 0);
  CHECK(count_occurrences(w("ab"), Word{}) == 0);
}

TEST_CASE("occurrence counts agree with a naive scan") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> u(gen() % 12), v(1 + gen() % 3);
    for (auto& x : u) x = static_cast<Letter>(gen() % 2);
    for (auto& x : v) x = static_cast<Letter>(gen() % 2);
    CHECK(count_occurrences(Word(u), Word(v)) == naive_count(Word(u), Word(v)));
  }
}

TEST_CASE("abelianisation counts letters") {
  CHECK(abelianise(w("abbab"), 2) == std::vector<std::uint64_t>{2, 3});
  CHECK(abelianise(w("a"), 2) == std::vector<std::uint64_t>{1, 0});
  CHECK_THROWS_AS(abelianise(Word{}, 2), Error);
}

TEST_CASE("slices are one-based and inclusive") {
  const Word u = w("abbab");
  CHECK(u.slice(2, 4) == w("bba"));
  CHECK(u.slice(1, 5) == u);
  CHECK(u.window(3, 2) == w("ab"));
  CHECK_THROWS(u.slice(4, 6));
}

TEST_CASE("parsing uses the longest matching symbol") {
  const Alphabet multi({"x", "xy", "y"});
  const Word u = parse_word("xyxy", multi);
  REQUIRE(u.size() == 2);
  CHECK(u[0] == 1);
  CHECK(format_word(u, multi) == "xyxy");
  CHECK(format_word(parse_word("xxy", multi), multi) == "xxy");
  CHECK(parse_word("xxy", multi).size() == 2);
  CHECK_THROWS_AS(parse_word("xz", multi), Error);
}

TEST_CASE("words order lexicographically by letter code") {
  CHECK(w("aa") < w("ab"));
  CHECK(w("ab") < w("ba"));
  CHECK(w("a") < w("aa"));
  CHECK(WordHash{}(w("ab")) != WordHash{}(w("ba")));
}
