#pragma once

#include <stdexcept>
#include <string>

namespace fdml {

/// Base class for all fdml errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid points not strictly increasing, too few points, or negative weights.
class InvalidGridError : public Error {
 public:
  using Error::Error;
};

/// Two curves or datasets do not share the same grid or basis.
class RepresentationMismatchError : public Error {
 public:
  using Error::Error;
};

/// Least-squares design matrix is rank deficient for the requested basis.
class SingularFitError : public Error {
 public:
  using Error::Error;
};

/// Kernel bandwidth is not strictly positive.
class InvalidBandwidthError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented domain (alpha, steps, dimensions, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Neighborhood graph split into more than one connected component.
class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError(const std::string& what, int n_components)
      : Error(what), n_components_(n_components) {}

  int n_components() const noexcept { return n_components_; }

 private:
  int n_components_;
};

/// Metric (Gram) matrix is singular; its inverse square root does not exist.
class NonInvertibleMetricError : public Error {
 public:
  using Error::Error;
};

/// An eigensolver or other numeric routine failed to produce a usable result.
class NumericFailureError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, long line = 0)
      : Error(what), line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace fdml
