#pragma once

#include <stdexcept>
#include <string>

namespace tensorwalk {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible tensor/matrix shapes or malformed structural input.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// A value fell outside the mathematical domain of an operation
/// (non-Hermitian input, eigenvalue outside a function's domain, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A stated premise of a lemma/theorem was violated where the operation
/// requires it to hold (as opposed to premises that are merely reported).
class PremiseError : public Error {
 public:
  explicit PremiseError(const std::string& what) : Error(what) {}
};

/// Bad experiment configuration (unknown names, schema violations, ...).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace tensorwalk
