#pragma once

#include <stdexcept>
#include <string>

#include "colombeau/kernels/interval.hpp"

namespace colombeau {

/// A numerical routine could not reach its requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature hit its refinement limit.
class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& what, Interval worst)
      : NumericalError(what), worst_(worst) {}
  Interval worst_subinterval() const { return worst_; }

 private:
  Interval worst_;
};

/// A flow trajectory left the working window.
class EscapeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A diffeomorphism failed the orientation probe on a support.
class OrientationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace colombeau
