// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hexstar {

/// Bad input: out-of-range sector, malformed state spec, invalid parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical check failed: non-integer character projection, eigensolver
/// failure, inconsistent geometry, ambiguous symmetry label.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hexstar
