#pragma once

#include <stdexcept>
#include <string>

namespace bdcoords {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact and floating-point scalars were combined in one operation.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Shapes of matrices, vectors or flag tuples do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be nonzero vanished (singular basis, coincident points,
/// non-generic flags, parabolic holonomy, ...).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed surface description or input file.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace bdcoords
