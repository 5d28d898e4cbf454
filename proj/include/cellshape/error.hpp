#pragma once

#include <stdexcept>
#include <string>

namespace cellshape {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or its payload is corrupt.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// File is readable but not in a supported container format.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Geometry too small or flat for the requested descriptor.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class NoRegionError : public Error {
 public:
  using Error::Error;
};

/// NIfTI payload uses a datatype the codec does not handle.
class UnsupportedDtypeError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Label table is missing a required column.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Label table row carries an unusable value.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DuplicateError : public Error {
 public:
  using Error::Error;
};

/// Regions of a mask have no row in the label table.
class MissingLabelError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line or run configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace cellshape
