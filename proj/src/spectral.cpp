#include "stochsub/spectral.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "stochsub/error.hpp"

namespace stochsub {

namespace {

struct PowerResult {
  double lambda;
  std::vector<double> vector;
  double residual;
  long iterations;
};

void multiply(const RealMatrix& m, bool transpose, const std::vector<double>& x,
              std::vector<double>& y) {
  const std::size_t n = m.size();
  std::fill(y.begin(), y.end(), 0.0);
  if (!transpose) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
      y[i] = s;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = x[i];
      if (xi == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) y[j] += m(i, j) * xi;
    }
  }
}

PowerResult power_iterate(const RealMatrix& m, bool transpose, const PowerIterationOptions& opt) {
  const std::size_t n = m.size();
  std::vector<double> x(n, 1.0 / static_cast<double>(n)), y(n);
  double best = std::numeric_limits<double>::infinity();
  long best_at = 0;
  const char* side = transpose ? "left" : "right";
  for (long it = 1; it <= opt.max_iterations; ++it) {
    multiply(m, transpose, x, y);
    // x >= 0 with ||x||_1 = 1, so ||Mx||_1 is the Rayleigh-type estimate.
    const double lambda = std::accumulate(y.begin(), y.end(), 0.0);
    if (!(lambda > 0.0))
      throw NotPrimitive(std::string("power iteration (") + side +
                         "): matrix annihilates the iterate");
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += std::abs(y[i] - lambda * x[i]);
    if (residual <= opt.tolerance) return {lambda, x, residual, it};
    if (residual < best * (1.0 - 1e-16)) {
      best = residual;
      best_at = it;
    } else if (it - best_at >= opt.stall_window) {
      throw ConvergenceError(std::string("power iteration (") + side + ") stalled at residual " +
                                 std::to_string(best),
                             best, it);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / lambda;
  }
  throw ConvergenceError(std::string("power iteration (") + side + ") hit the iteration cap of " +
                             std::to_string(opt.max_iterations),
                         best, opt.max_iterations);
}

}  // namespace

PFEigenpair pf_eigenpair(const RealMatrix& m, const PowerIterationOptions& options) {
  if (m.size() == 0) throw Error("pf_eigenpair: empty matrix");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j) < 0.0) throw Error("pf_eigenpair: negative matrix entry");

  auto right = power_iterate(m, false, options);
  auto left = power_iterate(m, true, options);

  for (std::size_t i = 0; i < m.size(); ++i)
    if (!(right.vector[i] > 0.0) || !(left.vector[i] > 0.0))
      throw NotPrimitive("pf_eigenpair: eigenvector has a non-positive component at index " +
                         std::to_string(i));

  PFEigenpair out;
  out.lambda = right.lambda;
  // Renormalise explicitly so the sum is 1 to rounding.
  const double norm = std::accumulate(right.vector.begin(), right.vector.end(), 0.0);
  out.right = std::move(right.vector);
  for (auto& r : out.right) r /= norm;
  const double dot = std::inner_product(left.vector.begin(), left.vector.end(), out.right.begin(), 0.0);
  out.left = std::move(left.vector);
  for (auto& l : out.left) l /= dot;
  out.residual = right.residual;
  out.left_residual = left.residual;
  out.iterations = right.iterations + left.iterations;
  return out;
}

PFEigenpair pf_eigenpair(const RationalMatrix& m, const PowerIterationOptions& options) {
  return pf_eigenpair(to_real(m), options);
}

}  // namespace stochsub
