#pragma once

#include <stdexcept>
#include <string>

namespace qaw {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation is undefined for the regime of q (e.g. an infinite product at q = 1).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument failed (|a| >= 1, |x| > 1, zero factor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncation would need more terms than QContext::max_terms allows.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// The previous expansion table is too short for the requested output order.
class TailTooLarge : public Error {
 public:
  using Error::Error;
};

class DivergenceSuspected : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace qaw
