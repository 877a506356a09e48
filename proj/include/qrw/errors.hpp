#pragma once

#include <stdexcept>
#include <string>

namespace qrw {

/// Malformed input document (bialgebra, group, step function, config).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural identity that an input must satisfy does not hold.
class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (h <= 0, h|xi|^2 > 1, bad index).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Incompatible shapes or sources; also raised when a tensor power exceeds its cap.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qrw
