#pragma once

#include <stdexcept>
#include <string>

namespace kronstab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: malformed partitions, mismatched degrees, undefined padding.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class NotPaddable : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class SizeMismatch : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Failures of the computation itself (caps, overflow, probe disagreement).
class ComputationError : public Error {
 public:
  using Error::Error;
};

class DegreeTooLarge : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class OverflowError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NotStabilized : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Store and file errors.
class StoreError : public Error {
 public:
  using Error::Error;
};

class StoreCorrupt : public StoreError {
 public:
  using StoreError::StoreError;
};

class IoError : public StoreError {
 public:
  using StoreError::StoreError;
};

}  // namespace kronstab
