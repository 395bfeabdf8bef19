#pragma once

#include <stdexcept>
#include <string>

namespace aclb {

/// Bad or inconsistent input data (files, records, configs). CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during training or inference (non-finite loss or
/// gradient, degenerate norms). CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aclb
