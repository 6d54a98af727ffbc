#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaproj {

// Base for all library errors.
struct GaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element has no two-sided inverse (zero or a zero divisor).
struct NotInvertibleError : GaError {
  using GaError::GaError;
};

// Operands belong to different algebras, or projector kinds were mixed.
struct MismatchError : GaError {
  using GaError::GaError;
};

// An input is outside the operation's domain (non-blade generator,
// non-vector chain input, and the like).
struct DomainError : GaError {
  using GaError::GaError;
};

// Random generation exhausted its retry budget.
struct GenerationError : GaError {
  using GaError::GaError;
};

// Command usage violation (unknown check, disallowed kind for a check).
struct UsageError : GaError {
  using GaError::GaError;
};

// Expression syntax error; offset is the byte position in the input.
struct ParseError : GaError {
  std::size_t offset;
  ParseError(const std::string& message, std::size_t offset)
      : GaError(message), offset(offset) {}
};

}  // namespace gaproj
