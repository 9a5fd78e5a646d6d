#include "zetadist/error.hpp"

#include <cstdio>

namespace zetadist {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_length: return "invalid-length";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::non_invertible: return "non-invertible";
    case ErrorKind::unsupported_exactness: return "unsupported-exactness";
    case ErrorKind::out_of_domain: return "out-of-domain";
    case ErrorKind::not_a_distribution: return "not-a-distribution";
    case ErrorKind::hypothesis_violation: return "hypothesis-violation";
    case ErrorKind::log_undefined: return "log-undefined";
    case ErrorKind::resource: return "resource";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::resource: return 2;
    case ErrorKind::io: return 3;
    default: return 1;
  }
}

std::string message_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace zetadist
