#pragma once

#include <stdexcept>
#include <string>

namespace pslens {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction receives arguments of the wrong shape.
class InvalidArgs : public Error {
 public:
  using Error::Error;
};

class NonMonotonePredicate : public Error {
 public:
  using Error::Error;
};

class MissingMerge : public Error {
 public:
  MissingMerge() : Error("i-poset has no merge operator") {}
  using Error::Error;
};

// A finite table failed eager validation; what() carries the full report.
class InvalidIPoset : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

// Domain value rejected at construction (e.g. a delta whose upserts and
// deletions overlap).
class InvalidState : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pslens
