#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class AxiomKind { self_distance, zero_separation, triangle, shape };

class AxiomViolation : public Error {
 public:
  AxiomViolation(AxiomKind kind, std::size_t x, std::size_t y, std::size_t z, const std::string& what);
  AxiomKind kind() const { return kind_; }
  std::size_t x() const { return x_; }
  std::size_t y() const { return y_; }
  std::size_t z() const { return z_; }

 private:
  AxiomKind kind_;
  std::size_t x_, y_, z_;
};

/// Bad request: unknown family name, malformed parameters, out-of-range index.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis does not hold for the input (not geodetic, not a Moore
/// graph, not an even cycle, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NotGeodetic : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class NotDistanceRegular : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Two evaluation routes that must agree did not.
class ConventionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownTrail : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

}  // namespace mh
