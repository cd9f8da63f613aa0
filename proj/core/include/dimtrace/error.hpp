#pragma once

#include <stdexcept>
#include <string>

namespace dimtrace {

/// Base class for every error raised by the toolkit. A thrown Error means
/// "no verdict"; a negative mathematical answer is never reported this way.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Trial division plus primality testing could not fully factor an integer.
class FactorizationIncomplete : public Error {
 public:
  explicit FactorizationIncomplete(const std::string& what)
      : Error("factorization incomplete: " + what) {}
};

/// The input exceeds the documented exact-computation envelope.
class SizeEnvelopeExceeded : public Error {
 public:
  explicit SizeEnvelopeExceeded(const std::string& what)
      : Error("size envelope exceeded: " + what) {}
};

}  // namespace dimtrace
