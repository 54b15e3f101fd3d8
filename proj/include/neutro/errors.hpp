#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace neutro {

// Base for every recoverable error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed quantity broke its [0,1] bound by more than the noise tolerance.
// This signals a bug in the decomposition logic, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested operation has no definition for the given variant
// (the scaled family has no closed-form inverse).
class VariantUnsupported : public Error {
 public:
  using Error::Error;
};

// Base for row-level ingestion failures; `line` is 1-based in the source stream.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what) : Error(what), line(line) {}
  std::size_t line;
};

// Row cannot be interpreted at all: wrong arity, bad number syntax, bad JSON, ...
class MalformedRow final : public ParseError {
 public:
  MalformedRow(std::size_t line, const std::string& reason);
};

// A field parsed as a number but lies outside [0,1] beyond the ingestion tolerance.
class OutOfRange final : public ParseError {
 public:
  OutOfRange(std::size_t line, std::string field, double value);
  std::string field;
  double value;
};

// The stream held no data rows.
class EmptyInput final : public Error {
 public:
  EmptyInput();
};

// Grid spacing does not divide the unit interval evenly.
class InvalidStep final : public Error {
 public:
  explicit InvalidStep(double step);
  double step;
};

// Writing results failed mid-stream.
class SinkFailure final : public Error {
 public:
  using Error::Error;
};

}  // namespace neutro
