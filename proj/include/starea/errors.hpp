#pragma once

#include <stdexcept>
#include <string>

namespace starea {

// Base class for every error raised by the library; callers that only want a
// broad catch can use this one.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation needed to divide by a series whose constant term is (numerically)
// zero, e.g. reciprocal of z + ...
class NearZeroConstantTerm : public Error {
public:
  using Error::Error;
};

// The series does not satisfy the normalization the operation requires
// (f(0) = 0, f'(0) = 1 for map-level operations; constant term 1 for log/pow).
class NotNormalized : public Error {
public:
  using Error::Error;
};

// A series summation failed to converge (argument outside the convergence
// region, or the term cap was reached before the tolerance).
class DivergentSeries : public Error {
public:
  using Error::Error;
};

// A scalar argument is outside its documented domain.
class BadParameter : public Error {
public:
  using Error::Error;
};

// A radius argument is outside (0, 1] (or past the cap of a quadrature rule).
class RadiusOutOfRange : public Error {
public:
  using Error::Error;
};

// A pointwise evaluation hit a singularity (e.g. |f(z)| ~ 0 where a ratio
// needs f in the denominator).
class EvaluationFailure : public Error {
public:
  using Error::Error;
};

}  // namespace starea
