#include "zetadist/log_linear.hpp"

#include <mpfr.h>

#include <cmath>

#include "zetadist/error.hpp"
#include "zetadist/primes.hpp"

namespace zetadist {

LogLinear LogLinear::log_of(std::uint64_t n) {
  LogLinear out;
  for (const auto& pp : factorize(n)) {
    out.terms_.emplace(pp.prime, Rational(pp.exponent));
  }
  return out;
}

LogLinear LogLinear::from_terms(Terms terms) {
  LogLinear out;
  for (auto& [p, c] : terms) {
    c.canonicalize();
    if (!zetadist::is_zero(c)) out.terms_.emplace(p, std::move(c));
  }
  return out;
}

Rational LogLinear::coefficient(std::uint64_t prime) const {
  auto it = terms_.find(prime);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LogLinear::add_scaled(const LogLinear& x, const Rational& scale) {
  if (zetadist::is_zero(scale)) return;
  for (const auto& [p, c] : x.terms_) {
    auto [it, inserted] = terms_.try_emplace(p, 0);
    it->second += c * scale;
    if (zetadist::is_zero(it->second)) terms_.erase(it);
  }
}

LogLinear& LogLinear::operator+=(const LogLinear& other) {
  add_scaled(other, Rational(1));
  return *this;
}

LogLinear& LogLinear::operator-=(const LogLinear& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

LogLinear& LogLinear::operator*=(const Rational& scale) {
  if (zetadist::is_zero(scale)) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scale;
  return *this;
}

LogLinear LogLinear::operator-() const {
  LogLinear out = *this;
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

double LogLinear::to_double() const {
  double sum = 0.0;
  for (const auto& [p, c] : terms_) sum += zetadist::to_double(c) * std::log(static_cast<double>(p));
  return sum;
}

std::optional<Rational> LogLinear::ratio_to_log(std::uint64_t n) const {
  if (is_zero()) return Rational(0);
  auto factors = factorize(n);
  if (factors.size() != terms_.size()) return std::nullopt;
  std::optional<Rational> ratio;
  for (const auto& pp : factors) {
    auto it = terms_.find(pp.prime);
    if (it == terms_.end()) return std::nullopt;
    Rational r = it->second / Rational(pp.exponent);
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

std::string LogLinear::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += zetadist::to_string(magnitude) + "*";
    out += "log(" + std::to_string(p) + ")";
    first = false;
  }
  return out;
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Sign interval_sign(const LogLinear& x, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec), log_lo(prec), log_hi(prec), term(prec);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (const auto& [p, c] : x.terms()) {
    mpfr_set_ui(log_lo.get(), p, MPFR_RNDN);  // p < 2^64 is exact at prec >= 64
    mpfr_log(log_lo.get(), log_lo.get(), MPFR_RNDD);
    mpfr_set_ui(log_hi.get(), p, MPFR_RNDN);
    mpfr_log(log_hi.get(), log_hi.get(), MPFR_RNDU);
    bool positive = sgn(c) > 0;
    mpfr_mul_q(term.get(), positive ? log_lo.get() : log_hi.get(), c.get_mpq_t(), MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), term.get(), MPFR_RNDD);
    mpfr_mul_q(term.get(), positive ? log_hi.get() : log_lo.get(), c.get_mpq_t(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), term.get(), MPFR_RNDU);
  }
  if (mpfr_sgn(lo.get()) > 0) return Sign::positive;
  if (mpfr_sgn(hi.get()) < 0) return Sign::negative;
  return Sign::zero;  // undecided at this precision
}

}  // namespace

Sign sign_of(const LogLinear& x) {
  if (x.is_zero()) return Sign::zero;
  bool any_positive = false;
  bool any_negative = false;
  for (const auto& [p, c] : x.terms()) {
    (sgn(c) > 0 ? any_positive : any_negative) = true;
  }
  if (!any_negative) return Sign::positive;
  if (!any_positive) return Sign::negative;

  // A nonzero value is bounded away from zero, so the loop terminates; the
  // cap only guards against a pathological input size.
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t{1} << 22); prec *= 2) {
    Sign s = interval_sign(x, prec);
    if (s != Sign::zero) return s;
  }
  throw Error(ErrorKind::resource, "sign_of: enclosure did not separate from zero");
}

}  // namespace zetadist
