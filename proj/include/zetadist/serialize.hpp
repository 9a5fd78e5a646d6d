#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zetadist/arithmetic_function.hpp"
#include "zetadist/levy.hpp"
#include "zetadist/log_linear.hpp"
#include "zetadist/zero_scan.hpp"

namespace zetadist {

using Json = nlohmann::ordered_json;

// 17 significant digits, '.' decimal point, shortest exponent form.
std::string format_double(double x);

// {"name": ..., "coeffs": [["num", "den"], ...], "growth": {"C", "eps"[, "support"]} | null}
Json to_json(const ExactFunction& a);
ExactFunction function_from_json(const Json& j);

// {"p": ["num", "den"], ...} with primes in increasing order.
Json to_json(const LogLinear& x);
LogLinear log_linear_from_json(const Json& j);

Json to_json(const Rectangle& r);
Json to_json(const ZeroScanReport& r);
Json to_json(const Sigma0Estimate& e);
Json to_json(const Classification& c);

struct RunManifest {
  std::vector<std::string> command_line;
  std::string input;       // generator spec, or "file:<path>"
  std::string input_hash;  // fnv1a64 of the input file, empty for generators
  std::optional<std::size_t> truncation;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> tolerances;
  std::string output;
  std::string tool_version;
  double wall_time_seconds = 0.0;
};

Json to_json(const RunManifest& m);

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace zetadist
