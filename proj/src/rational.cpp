#include "stochsub/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <unordered_set>

#include "stochsub/error.hpp"
#include "stochsub/matrix.hpp"

namespace stochsub {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Boolean matrix with bitset rows.
struct Pattern {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  explicit Pattern(std::size_t size) : n(size), words((size + 63) / 64), bits(size * words, 0) {}
  void set(std::size_t i, std::size_t j) { bits[i * words + j / 64] |= 1ULL << (j % 64); }
  bool get(std::size_t i, std::size_t j) const { return (bits[i * words + j / 64] >> (j % 64)) & 1ULL; }
  bool operator==(const Pattern&) const = default;

  bool all_positive() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t w = 0; w < words; ++w) {
        const std::size_t width = std::min<std::size_t>(64, n - w * 64);
        const std::uint64_t full = width == 64 ? ~0ULL : ((1ULL << width) - 1);
        if (bits[i * words + w] != full) return false;
      }
    return true;
  }

  Pattern times(const Pattern& rhs) const {
    Pattern out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (get(i, l))
          for (std::size_t w = 0; w < words; ++w) out.bits[i * words + w] |= rhs.bits[l * words + w];
    return out;
  }
};

struct PatternHash {
  std::size_t operator()(const Pattern& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : p.bits) h = (h ^ b) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

int exponent_of_pattern(const Pattern& base) {
  const std::size_t n = base.n;
  if (n == 0) return 0;
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  // Boolean powers are eventually periodic; a repeated pattern before reaching
  // all-positive means no power ever will.
  std::unordered_set<Pattern, PatternHash> seen;
  Pattern power = base;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (power.all_positive()) return static_cast<int>(k);
    if (!seen.insert(power).second) return 0;
    power = power.times(base);
  }
  return 0;
}

template <typename Positive>
Pattern support_pattern(std::size_t n, Positive positive) {
  Pattern p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (positive(i, j)) p.set(i, j);
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw Error("malformed rational '" + std::string(text) + "' (expected num/den)");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den));
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RealMatrix to_real(const RationalMatrix& m) {
  RealMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

int primitivity_exponent(const RationalMatrix& m) {
  return exponent_of_pattern(
      support_pattern(m.size(), [&](std::size_t i, std::size_t j) { return sgn(m(i, j)) > 0; }));
}

int primitivity_exponent(const RealMatrix& m) {
  return exponent_of_pattern(
      support_pattern(m.size(), [&](std::size_t i, std::size_t j) { return m(i, j) > 0.0; }));
}

}  // namespace stochsub
