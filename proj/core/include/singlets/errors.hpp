#pragma once

#include <stdexcept>

namespace singlets {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group rank outside the supported range (SU(N) needs N >= 2).
class InvalidRankError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must live in the same torus have different ranks.
class RankMismatchError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (negative powers, bad windows).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A recurrence produced a non-integral term or hit a vanishing denominator.
class RecurrenceError : public Error {
 public:
  using Error::Error;
};

/// Truncated power series operation that has no valid result.
class SeriesError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON documents, decimal strings, CLI ranges).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace singlets
