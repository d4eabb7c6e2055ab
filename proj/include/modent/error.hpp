// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modent {

/// Operand shapes (algebra dimension d, module rank n, frame size m) disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value lies outside the domain of a function, e.g. log below its floor.
class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& what, std::size_t fiber)
      : std::domain_error(what), fiber_(fiber) {}

  std::size_t fiber() const noexcept { return fiber_; }

 private:
  std::size_t fiber_;
};

/// A documented precondition (unit inner product, Parseval frame, ...) fails.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail
}  // namespace modent
