#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace driftrec {

/// Operand shapes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar argument (usually a process time) lies outside its domain.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Numerical procedure failed (non-convergence, degenerate configuration, non-finite values).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampler produced a non-finite state.
class DivergenceError : public NumericalError {
 public:
  DivergenceError(const std::string& what, std::size_t step)
      : NumericalError(what + " (step " + std::to_string(step) + ")"), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace driftrec
