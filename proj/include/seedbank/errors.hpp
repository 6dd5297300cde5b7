// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEEDBANK_ERRORS_HPP
#define SEEDBANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seedbank {

// Invalid parameter or argument value (bad N, beta, epsilon, weights, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched vector/matrix sizes between operands.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured compute budget (steps, events, states) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A linear system that should be regular failed to solve to tolerance.
struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem read/write failure.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace seedbank

#endif  // SEEDBANK_ERRORS_HPP
