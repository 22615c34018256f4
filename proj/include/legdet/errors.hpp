#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace legdet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input validation failures (CLI exit code 2).
struct ValidationError : Error {
  using Error::Error;
};

struct NotPrimeError : ValidationError {
  explicit NotPrimeError(const std::string& what) : ValidationError(what) {}
};

struct WrongResidueError : ValidationError {
  explicit WrongResidueError(const std::string& what) : ValidationError(what) {}
};

struct NonSquareError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  SingularMatrixError(const std::string& what, std::size_t stage)
      : Error(what + " (zero pivot at stage " + std::to_string(stage) + ")"),
        pivot_stage(stage) {}
  std::size_t pivot_stage;
};

struct PoleError : Error {
  using Error::Error;
};

struct DuplicateNodesError : Error {
  using Error::Error;
};

/// The Gauss-sum sign gate tripped: the product identities hold only with
/// the square root of p negated (CLI exit code 3).
struct ConventionError : Error {
  using Error::Error;
};

/// A proven identity failed to hold numerically.  Carries the structured
/// finding so callers can report (prime, check, expected, actual).
struct TheoremViolation : Error {
  TheoremViolation(std::string prime_, std::string check_, std::string expected_,
                   std::string actual_)
      : Error("theorem violation: p=" + prime_ + " " + check_ + ": expected " + expected_ +
              ", got " + actual_),
        prime(std::move(prime_)),
        check(std::move(check_)),
        expected(std::move(expected_)),
        actual(std::move(actual_)) {}
  std::string prime, check, expected, actual;
};

/// A broken internal invariant (e.g. an inexact fraction-free division):
/// always an implementation bug, never a theorem failure.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace legdet
