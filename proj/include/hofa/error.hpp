// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hofa {

/// Base of every error raised by the library. `exit_code()` is the code the
/// command-line front end maps the error to.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 5; }
};

/// Malformed input: wrong shapes, mismatched spaces, bad JSON.
class SchemaError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// An enumeration would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// A documented precondition does not hold. `witness` optionally carries a
/// JSON-serialized counterexample.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what, std::string witness = {})
      : Error(what), witness_(std::move(witness)) {}
  int exit_code() const noexcept override { return 4; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A postcondition asserted by the library failed. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void check_schema(bool ok, const std::string& msg) {
  if (!ok) throw SchemaError(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) throw InternalError("internal assertion failed: " + msg);
}

}  // namespace detail
}  // namespace hofa
