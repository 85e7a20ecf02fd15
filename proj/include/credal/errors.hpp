#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace credal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, violated invariant, or mismatched operands.
class ValidationError : public Error {
public:
  using Error::Error;
};

class InvalidCategoryError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DomainMismatchError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// The assessments admit no dominating linear prevision.
class SureLossError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Levels of a count family disagree where they are required to agree.
class InconsistentFamilyError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DegreeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Exact evaluation hit a division by zero.
class EvaluationError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A command was invoked with missing or malformed flags.
class UsageError : public Error {
public:
  using Error::Error;
};

/// An enumeration would exceed the configured element cap.
class CapacityError : public Error {
public:
  CapacityError(const std::string& what, std::size_t cap)
      : Error(what + " (enumeration cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

/// Default upper bound on the number of elements any enumeration may produce.
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

}  // namespace credal
