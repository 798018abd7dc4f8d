#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace desargues {

/// Operand shapes do not fit the operation (matrix product, ambient dimension, vector length).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix the caller promised was invertible turned out singular.
class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rational-to-double conversion left the finite range.
class NonFiniteConversion : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A documented precondition of a lattice or Boolean operation was violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The configuration is not in general position. `index` is 1-based and names
/// the offending cross-line or cross-point.
class DegenerateConfig : public std::runtime_error {
 public:
  DegenerateConfig(std::size_t index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A projective measurement was asked to collapse onto an outcome of
/// (numerically) zero probability. `stage` is 1 or 2 inside a sequence, 0 otherwise.
class ZeroProbabilityOutcome : public std::runtime_error {
 public:
  ZeroProbabilityOutcome(int stage, const std::string& what)
      : std::runtime_error(what), stage_(stage) {}
  int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

}  // namespace desargues
