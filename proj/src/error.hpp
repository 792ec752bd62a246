#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modspec {

enum class ErrorKind {
  InvalidInput,   // malformed arguments, parse failures, bad dimensions
  Connectivity,   // graph is not connected
  Degree,         // isolated node, D^{-1/2} undefined
  Degenerate,     // zero perturbation, zero vector, zero-norm column
  Pole,           // evaluation at (or within tolerance of) a secular pole
  Numeric,        // iteration did not converge
  Assumption,     // a method precondition does not hold numerically
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class PoleError : public Error {
 public:
  PoleError(std::size_t index, const std::string& message)
      : Error(ErrorKind::Pole, message), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ConvergenceError : public Error {
 public:
  // `residual` is the off-diagonal norm for eigensolvers, the bracket width
  // for root finders.
  ConvergenceError(double residual, double lower, double upper,
                   const std::string& message)
      : Error(ErrorKind::Numeric, message),
        residual_(residual), lower_(lower), upper_(upper) {}

  double residual() const noexcept { return residual_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double residual_;
  double lower_;
  double upper_;
};

class ConnectivityError : public Error {
 public:
  ConnectivityError(std::vector<std::size_t> component_sizes,
                    const std::string& message)
      : Error(ErrorKind::Connectivity, message),
        sizes_(std::move(component_sizes)) {}

  const std::vector<std::size_t>& component_sizes() const noexcept {
    return sizes_;
  }

 private:
  std::vector<std::size_t> sizes_;
};

}  // namespace modspec
