#pragma once

#include <stdexcept>
#include <string>

namespace cepseval {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the normalized distance p reaches or exceeds 1, where
// ln(1/(1-p)) is undefined. Carries the offending value so callers can
// report it (or retry with clamping).
class SaturationError : public Error {
 public:
  SaturationError(const std::string& what, double p) : Error(what), p_(p) {}
  double p() const { return p_; }

 private:
  double p_;
};

// Input text is not valid UTF-8.
class Utf8Error : public Error {
 public:
  using Error::Error;
};

// Manifest / report / attention-case file problems (I/O and format).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cepseval
