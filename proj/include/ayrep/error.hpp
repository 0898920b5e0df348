#pragma once

#include <stdexcept>
#include <string>

namespace ayrep {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A group or sweep would exceed the configured size caps.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class EmptyShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A documented precondition (identity membership, convexity, ...) failed.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// tableau_from_content was given a sequence that is not a content vector.
class ConstructionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A functional is not generic for the cell it is asked to build on.
class GenericityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ayrep
