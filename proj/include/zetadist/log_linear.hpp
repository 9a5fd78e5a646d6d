#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "zetadist/rational.hpp"

namespace zetadist {

// Exact real number sum_p c_p * log p with rational c_p over primes p.
//
// The logarithms of distinct primes are linearly independent over Q, so two
// values are equal exactly when their coefficient maps are equal. Zero
// coefficients are never stored.
class LogLinear {
 public:
  using Terms = std::map<std::uint64_t, Rational>;

  LogLinear() = default;

  // log n expanded through the prime factorisation of n; log 1 is zero.
  static LogLinear log_of(std::uint64_t n);

  // Builds from (prime, coefficient) pairs. Primality of keys is not checked.
  static LogLinear from_terms(Terms terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(std::uint64_t prime) const;

  LogLinear& operator+=(const LogLinear& other);
  LogLinear& operator-=(const LogLinear& other);
  LogLinear& operator*=(const Rational& scale);

  // *this += scale * x, the accumulation step of every convolution here.
  void add_scaled(const LogLinear& x, const Rational& scale);

  friend LogLinear operator+(LogLinear a, const LogLinear& b) { return a += b; }
  friend LogLinear operator-(LogLinear a, const LogLinear& b) { return a -= b; }
  friend LogLinear operator*(LogLinear a, const Rational& s) { return a *= s; }
  friend LogLinear operator*(const Rational& s, LogLinear a) { return a *= s; }
  LogLinear operator-() const;

  bool operator==(const LogLinear& other) const { return terms_ == other.terms_; }

  // Nearest double; not used for sign decisions.
  double to_double() const;

  // r such that *this == r * log n, if one exists. n must be >= 2.
  std::optional<Rational> ratio_to_log(std::uint64_t n) const;

  // "1/2*log(2) - 3*log(3)"; "0" for the zero value.
  std::string to_string() const;

 private:
  Terms terms_;
};

inline bool is_zero(const LogLinear& x) { return x.is_zero(); }

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Exact when every coefficient has the same sign; otherwise the sign of the
// interval sum_p c_p * [log p]_prec, with the working precision doubled until
// the enclosure excludes zero.
Sign sign_of(const LogLinear& x);

}  // namespace zetadist
