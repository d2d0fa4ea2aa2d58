// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rootfan {

/// Malformed or inadmissible input.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object violates a structural law it must satisfy. The message
/// names the law that failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Request exceeds an enumeration cap (rank limits on face lattices etc.).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rootfan
