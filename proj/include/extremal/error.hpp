#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  InvalidInput = 2,
  EnumerationTooLarge = 3,
  PolarizationExhausted = 4,
  InternalConsistency = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace extremal
