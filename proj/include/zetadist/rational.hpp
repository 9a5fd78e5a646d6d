#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace zetadist {

// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "p/q" or the pair form used by the JSON schema.
Rational parse_rational(std::string_view text);
Rational parse_rational(std::string_view numerator, std::string_view denominator);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(double value) { return value == 0.0; }

// Nearest double (mpq_get_d truncates toward zero).
double to_double(const Rational& value);
inline double to_double(double value) { return value; }

// n^e for a machine integer base and small exponent, exactly.
Rational rational_power(std::uint64_t base, long exponent);

}  // namespace zetadist
