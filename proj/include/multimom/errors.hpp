#pragma once

#include <stdexcept>
#include <string>

namespace multimom {

// Base class for all domain errors raised by this library.  Callers that
// only need "reject bad input" semantics can catch this one type; `name()`
// identifies the violated constraint for diagnostics.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* name() const { return "Error"; }
};

// trials < 1
class BadTrialCount : public Error {
 public:
  explicit BadTrialCount(const std::string& msg) : Error(msg) {}
  const char* name() const override { return "BadTrialCount"; }
};

// probability vector is empty
class EmptyDimension : public Error {
 public:
  explicit EmptyDimension(const std::string& msg) : Error(msg) {}
  const char* name() const override { return "EmptyDimension"; }
};

// an entry is outside [0,1] or the entries sum to more than 1
class SimplexViolation : public Error {
 public:
  explicit SimplexViolation(const std::string& msg) : Error(msg) {}
  const char* name() const override { return "SimplexViolation"; }
};

// a moment index is outside 1..d
class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
  const char* name() const override { return "IndexOutOfRange"; }
};

// a vector that must have one entry per category does not
class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(const std::string& msg) : Error(msg) {}
  const char* name() const override { return "LengthMismatch"; }
};

// a count vector lies outside the support lattice
class SupportViolation : public Error {
 public:
  explicit SupportViolation(const std::string& msg) : Error(msg) {}
  const char* name() const override { return "SupportViolation"; }
};

// an enumeration would visit more lattice points than the caller allowed
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
  const char* name() const override { return "BudgetExceeded"; }
};

}  // namespace multimom
