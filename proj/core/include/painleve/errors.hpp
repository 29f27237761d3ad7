#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace painleve {

/// Base for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported equation text.
class InputError : public Error {
 public:
  using Error::Error;
};

struct ParseDiagnostic {
  enum class Severity { kError, kWarning };

  std::size_t byte_offset = 0;
  std::string message;
  Severity severity = Severity::kError;
};

class SyntaxError : public InputError {
 public:
  explicit SyntaxError(ParseDiagnostic diagnostic)
      : InputError("syntax error at offset " + std::to_string(diagnostic.byte_offset) + ": " +
                   diagnostic.message),
        diagnostic_(std::move(diagnostic)) {}

  const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

class NonPolynomial : public InputError {
 public:
  using InputError::InputError;
};

class NonMonicLeading : public InputError {
 public:
  using InputError::InputError;
};

class MissingDerivative : public InputError {
 public:
  using InputError::InputError;
};

class LinearEquation : public InputError {
 public:
  using InputError::InputError;
};

class NoBasePoint : public InputError {
 public:
  using InputError::InputError;
};

class ExcludedPoint : public InputError {
 public:
  using InputError::InputError;
};

class NumericFailure : public Error {
 public:
  using Error::Error;
};

class ZeroProduct : public Error {
 public:
  using Error::Error;
};

class CompatibilityFailure : public Error {
 public:
  CompatibilityFailure(unsigned index, const std::string& what)
      : Error(what), index_(index) {}
  unsigned index() const noexcept { return index_; }

 private:
  unsigned index_;
};

class DepthBeyondSupport : public Error {
 public:
  using Error::Error;
};

class WindowTooNarrow : public Error {
 public:
  WindowTooNarrow(std::size_t minimal_width, const std::string& what)
      : Error(what), minimal_width_(minimal_width) {}
  std::size_t minimal_width() const noexcept { return minimal_width_; }

 private:
  std::size_t minimal_width_;
};

class InterpolationInconsistent : public Error {
 public:
  using Error::Error;
};

class NotMonic : public Error {
 public:
  using Error::Error;
};

class InfeasibleSum : public Error {
 public:
  using Error::Error;
};

class OutOfBounds : public Error {
 public:
  using Error::Error;
};

}  // namespace painleve
