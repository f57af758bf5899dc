// Exception types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace roc {

// Invalid or degenerate input data (group too small, non-finite values, ...).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// CSV ingestion failure; carries the 1-based line number of the first
// offending record (0 when the problem is file-level, e.g. missing header).
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Iterative solver did not reach tolerance within the iteration budget.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, int iterations, double residual)
      : std::runtime_error(what), iterations_(iterations), residual_(residual) {}
  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

// Estimating equation has no root in the admissible region (e.g. all
// responses on one side).
class separation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Too few usable observations after masking / filtering.
class insufficient_data_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature failed to reach the requested tolerance; carries the
// best available estimate and the attained error bound.
class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& what, double partial, double error_bound)
      : std::runtime_error(what), partial_(partial), error_bound_(error_bound) {}
  double partial_estimate() const noexcept { return partial_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double partial_;
  double error_bound_;
};

}  // namespace roc
