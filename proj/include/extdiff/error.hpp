#pragma once

#include <stdexcept>
#include <string>

namespace extdiff {

// Base class for every error the library raises on bad input. Internal
// invariant failures use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misuse: mismatched groups, wrong member counts, inapplicable transforms.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A construction received parameters outside its stated domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An explicit operation table failed one of the group axioms.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Duplicate cosets and similar content violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive operation was asked to exceed its configured bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The operation does not apply to this kind of group (e.g. sequences need Z_v).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Stored data disagrees with what it was recomputed to be.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace extdiff
