#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zetadist {

enum class ErrorKind {
  invalid_length,
  invalid_argument,
  non_invertible,
  unsupported_exactness,
  out_of_domain,
  not_a_distribution,
  hypothesis_violation,
  log_undefined,
  resource,
  io,
};

std::string_view to_string(ErrorKind kind);

// Process exit status for a failure of this kind: 1 domain, 2 resource, 3 I/O.
int exit_code(ErrorKind kind);

// Short "%g" rendering of a number for error messages.
std::string message_number(double x);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zetadist
