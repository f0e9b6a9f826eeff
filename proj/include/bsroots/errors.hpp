#pragma once

#include <stdexcept>
#include <string>

namespace bsroots {

/// Malformed text input: ring declarations, polynomials, rationals, flags.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// The ring/ideal pair has no jump engine (or the operation is not defined
/// for this presentation).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bsroots
