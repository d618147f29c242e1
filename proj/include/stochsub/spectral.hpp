#pragma once

#include <vector>

#include "stochsub/matrix.hpp"

namespace stochsub {

// Perron-Frobenius eigenvalue with right and left eigenvectors, normalised
// so that ||R||_1 = 1 and L.R = 1.
struct PFEigenpair {
  double lambda = 0.0;
  std::vector<double> right;
  std::vector<double> left;
  // ||M R - lambda R||_1 and ||L M - lambda L||_1 / ||L||_1 at termination.
  double residual = 0.0;
  double left_residual = 0.0;
  long iterations = 0;
};

struct PowerIterationOptions {
  double tolerance = 1e-12;
  long max_iterations = 100'000;
  // Give up when the best residual has not improved (relatively, by more than
  // 1e-16) within this many iterations.
  long stall_window = 100;
};

// Power iteration on M and M^T. The matrix must be primitive (caller-checked);
// a non-positive eigenvector component is reported as NotPrimitive and a
// stalled or capped iteration as ConvergenceError.
PFEigenpair pf_eigenpair(const RealMatrix& m, const PowerIterationOptions& options = {});
PFEigenpair pf_eigenpair(const RationalMatrix& m, const PowerIterationOptions& options = {});

}  // namespace stochsub
