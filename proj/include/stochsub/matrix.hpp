#pragma once

#include <cstddef>
#include <vector>

#include "stochsub/rational.hpp"
#include "stochsub/words.hpp"

namespace stochsub {

// Dense row-major square matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<Rational>;
using RealMatrix = SquareMatrix<double>;

RealMatrix to_real(const RationalMatrix& m);

// Matrix whose rows and columns are indexed by words: single letters for the
// mean substitution matrix, legal l-words for induced matrices.
struct LabeledMatrix {
  std::vector<Word> labels;
  RationalMatrix values;

  std::size_t size() const { return labels.size(); }
};

// Smallest k <= (n-1)^2 + 1 such that the support pattern of M^k is all
// positive, or 0 if there is none (M is not primitive).
int primitivity_exponent(const RationalMatrix& m);
int primitivity_exponent(const RealMatrix& m);

}  // namespace stochsub
