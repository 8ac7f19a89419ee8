#pragma once

#include <stdexcept>
#include <string>

namespace cxbox {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gamma pole hit at a non-positive integer.
struct PoleError : Error {
  using Error::Error;
};

// Binomial series diverges (Re(z) <= -1).
struct DivergentSeriesError : Error {
  using Error::Error;
};

// Pointwise evaluation requested in a regime where the spline is only a
// distribution (Re(z) in (-1, 0] with nonzero imaginary part).
struct UnsupportedEvaluationError : Error {
  using Error::Error;
};

// Square-matrix operation on a non-square direction set.
struct NotSquareError : Error {
  using Error::Error;
};

// Direction-set or problem-spec validation failure.
struct ValidationError : Error {
  using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

// Operation outside its documented scope (e.g. decay fit on non-diagonal M).
struct ScopeError : Error {
  using Error::Error;
};

// Symbol factorization undefined (zero of the base function).
struct UndefinedFactorizationError : Error {
  using Error::Error;
};

// Frequency field carries mass inside the Lizorkin window's inner ball.
struct WindowViolationError : Error {
  using Error::Error;
};

// Frequency grid cannot reach the requested tail-energy budget.
struct TailBudgetError : Error {
  using Error::Error;
};

}  // namespace cxbox
