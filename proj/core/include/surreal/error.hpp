#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surreal {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A left member is >= a right member: the pair describes a game, not a number.
class NotANumber : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A dyadic literal whose denominator is not a power of two, e.g. 1/3.
class NonDyadicDenominator : public Error {
 public:
  using Error::Error;
};

class MalformedSnapshot : public Error {
 public:
  using Error::Error;
};

// Recursion went deeper than Limits::max_depth.
class DepthExceeded : public Error {
 public:
  using Error::Error;
};

// The memo caches hit Limits::max_cache_entries under the fail-fast policy.
class CacheLimitExceeded : public Error {
 public:
  using Error::Error;
};

// The store's deadline passed mid-computation.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A product whose predicted generation is above the configured ceiling.
class FeasibilityExceeded : public Error {
 public:
  using Error::Error;
};

// An invariant the theory guarantees was violated; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace surreal
