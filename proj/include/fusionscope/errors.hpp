#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusionscope {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally broken input: index out of range, negative multiplicity,
/// duplicate entries, syntax errors in a ring document.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// API misuse, e.g. combining characters that live in different rings.
class UsageError : public Error {
 public:
  using Error::Error;
};

class NotACharacter : public Error {
 public:
  using Error::Error;
};

/// The ring violates an axiom that an operation relies on.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

/// A cross-check between two independent computations disagreed.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// Search space or rank exceeds a configured bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The SU(2) inductive derivation found zero or several candidates.
class DerivationFailure : public Error {
 public:
  using Error::Error;
};

/// Checked int64 arithmetic; throws std::overflow_error on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace fusionscope
