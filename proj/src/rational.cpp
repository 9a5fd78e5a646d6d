#include "zetadist/rational.hpp"

#include <cctype>

#include <mpfr.h>

#include "zetadist/error.hpp"

namespace zetadist {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    throw Error(ErrorKind::invalid_argument, "malformed integer '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(ErrorKind::invalid_argument, "malformed integer '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::invalid_argument, "zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view numerator, std::string_view denominator) {
  mpz_class num = parse_integer(numerator);
  mpz_class den = parse_integer(denominator);
  if (den == 0) {
    throw Error(ErrorKind::invalid_argument, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_rational(text, "1");
  return parse_rational(text.substr(0, slash), text.substr(slash + 1));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_power(std::uint64_t base, long exponent) {
  mpz_class b;
  mpz_set_ui(b.get_mpz_t(), base);
  mpz_class p;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
  r.canonicalize();
  return r;
}

double to_double(const Rational& value) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

}  // namespace zetadist
