#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stochsub {

// Exact rational arithmetic, canonicalised after every operation.
using Rational = mpq_class;

// Parses "num/den" or an integer literal. Throws stochsub::Error.
Rational parse_rational(std::string_view text);

// Always "num/den", e.g. "1/1", "3/4".
std::string format_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace stochsub
