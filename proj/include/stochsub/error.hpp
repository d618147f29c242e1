#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stochsub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rule data violated one or more invariants; every violation is listed.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

// A configurable resource limit (support size, enumeration count, letter
// budget) would be exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrimitive : public Error {
 public:
  using Error::Error;
};

class NotExpanding : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual, long iterations)
      : Error(what), residual_(residual), iterations_(iterations) {}
  double residual() const { return residual_; }
  long iterations() const { return iterations_; }

 private:
  double residual_;
  long iterations_;
};

}  // namespace stochsub
