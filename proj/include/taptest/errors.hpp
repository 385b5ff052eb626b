#pragma once

#include <stdexcept>
#include <string>

namespace taptest {

/// Input data that cannot be analysed: empty tables, NaNs, too few taps,
/// unknown labels. Maps to exit code 2 at the command line.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A persisted artifact violates a domain invariant. The message names the
/// invariant that failed.
class ValidationError : public DataError {
 public:
  using DataError::DataError;
};

/// File system or encoding failure. Maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace taptest
