#ifndef HOPFQ_ERROR_HPP
#define HOPFQ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfq {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic between scalars of different fields. Never coerced.
struct FieldMismatch : Error {
  using Error::Error;
};

/// Inversion of zero, or modular inverse of a non-unit.
struct DivisionByZero : Error {
  using Error::Error;
};

/// Composition or comparison of maps whose leg shapes do not line up.
struct ShapeMismatch : Error {
  using Error::Error;
};

/// A derived quantity violated a theorem it is guaranteed to satisfy.
/// Signals a bug in the pipeline, not a property of the input.
struct InternalInconsistency : Error {
  using Error::Error;
};

/// Text input (structure file, loop table, scalar literal) rejected.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_number)
      : Error(msg + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  explicit ParseError(const std::string& msg) : Error(msg), line(0) {}
  std::size_t line;
};

}  // namespace hopfq

#endif
