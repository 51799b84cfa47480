#pragma once

#include <stdexcept>
#include <string>

namespace icc {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data that violates a structural invariant (non-unimodular matrix,
/// non-automorphism map, relation violation, bad divisor chain, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside the supported group catalog.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace icc
