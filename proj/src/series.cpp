#include "zetadist/series.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

namespace zetadist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_sigma(double sigma) {
  if (!(sigma > 1.0)) {
    throw Error(ErrorKind::out_of_domain, "sigma must be > 1, got " + message_number(sigma));
  }
}

double delta_for(const GrowthCertificate& g, double sigma) {
  return std::min(kDerivativeDelta, (sigma - 1.0 - g.eps) / 2.0);
}

}  // namespace

std::size_t truncation_cap() {
  if (const char* env = std::getenv("ZETADIST_N_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

double tail_bound(double C, double eps, double sigma, std::size_t N) {
  if (!(sigma > 1.0 + eps)) {
    throw Error(ErrorKind::out_of_domain, "tail_bound: need sigma > 1 + eps");
  }
  if (N == 0) throw Error(ErrorKind::invalid_length, "tail_bound: N must be >= 1");
  const double n = static_cast<double>(N);
  return C * (std::pow(n, 1.0 + eps - sigma) / (sigma - eps - 1.0) + std::pow(n, eps - sigma));
}

GrowthCertificate derivative_certificate(const GrowthCertificate& g, int order, double delta) {
  if (order == 0) return g;
  const double k = order;
  const double factor = std::pow(k / (delta * std::numbers::e), k);
  return {g.C * factor, g.eps + delta, g.support_end};
}

double series_tail_bound(const GrowthCertificate& g, double sigma, std::size_t N, int order) {
  if (g.support_end && N >= *g.support_end) return 0.0;
  if (!(sigma > 1.0 + g.eps)) {
    throw Error(ErrorKind::out_of_domain,
                "sigma = " + message_number(sigma) + " is not > 1 + eps = " +
                    message_number(1.0 + g.eps) + " of the growth certificate");
  }
  auto d = derivative_certificate(g, order, delta_for(g, sigma));
  return tail_bound(d.C, d.eps, sigma, N);
}

std::size_t required_truncation(const GrowthCertificate& g, double sigma, double tol,
                                std::size_t cap, int order) {
  if (g.support_end && *g.support_end <= cap) return *g.support_end;
  auto ok = [&](std::size_t N) { return series_tail_bound(g, sigma, N, order) <= tol; };
  if (!ok(cap)) {
    throw Error(ErrorKind::resource, "tail bound " + message_number(tol) +
                                         " not reachable below the truncation cap " +
                                         std::to_string(cap));
  }
  std::size_t hi = std::min<std::size_t>(1024, cap);
  while (!ok(hi)) hi = std::min(hi * 2, cap);
  std::size_t lo = hi / 2;
  if (lo == 0 || ok(lo)) return lo == 0 ? hi : lo;
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

SeriesEvaluator::SeriesEvaluator(const NumericFunction& a, std::size_t N)
    : N_(N == 0 ? a.size() : N) {
  if (N_ > a.size()) {
    throw Error(ErrorKind::invalid_length, "evaluator truncation exceeds function length");
  }
  for (std::size_t n = N_; n >= 1; --n) {
    if (a(n) == 0.0) continue;
    coeff_.push_back(a(n));
    log_n_.push_back(std::log(static_cast<double>(n)));
  }
}

SeriesEvaluator::Values SeriesEvaluator::evaluate(std::complex<double> s) const {
  double zr = 0, zi = 0, dr = 0, di = 0;
  const double sigma = s.real();
  const double t = s.imag();
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    const double L = log_n_[i];
    const double mag = coeff_[i] * std::exp(-sigma * L);
    const double re = mag * std::cos(t * L);
    const double im = -mag * std::sin(t * L);
    zr += re;
    zi += im;
    dr -= L * re;
    di -= L * im;
  }
  return {{zr, zi}, {dr, di}};
}

std::complex<double> SeriesEvaluator::value(std::complex<double> s, int order) const {
  if (order < 0 || order > 2) {
    throw Error(ErrorKind::invalid_argument, "derivative order must be 0, 1 or 2");
  }
  double re_sum = 0, im_sum = 0;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    const double L = log_n_[i];
    double mag = coeff_[i] * std::exp(-s.real() * L);
    if (order >= 1) mag *= -L;
    if (order == 2) mag *= -L;
    re_sum += mag * std::cos(s.imag() * L);
    im_sum -= mag * std::sin(s.imag() * L);
  }
  return {re_sum, im_sum};
}

double SeriesEvaluator::abs_sum(double sigma) const {
  double sum = 0;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    sum += std::abs(coeff_[i]) * std::exp(-sigma * log_n_[i]);
  }
  return sum;
}

EvalResult evaluate_Z(const NumericFunction& a, EvalPoint s, int order) {
  return evaluate_Z(a, s, order, a.size());
}

EvalResult evaluate_Z(const NumericFunction& a, EvalPoint s, int order, std::size_t N) {
  require_sigma(s.sigma);
  EvalResult r;
  r.n_used = N;
  if (a.growth()) {
    r.tail_bound = series_tail_bound(*a.growth(), s.sigma, N, order);
  } else {
    r.tail_bound = kInf;
    r.certified = false;
  }
  r.value = SeriesEvaluator(a, N).value(s.s(), order);
  return r;
}

CfResult evaluate_cf(const NumericFunction& a, double sigma, double t) {
  require_sigma(sigma);
  SeriesEvaluator ev(a);
  const auto num = ev.value({sigma, t}, 0);
  const auto den = ev.value({sigma, 0.0}, 0);
  return {num / den, satisfies_assumption_a(a)};
}

EvalResult evaluate_G(const ASequence<double>& A, const Rational& a1, EvalPoint s,
                      const std::optional<GrowthCertificate>& a_growth) {
  require_sigma(s.sigma);
  if (a1 <= 0) throw Error(ErrorKind::log_undefined, "evaluate_G: log a(1) needs a(1) > 0");
  const std::size_t N = A.size();
  double re = 0, im = 0;
  for (std::size_t n = N; n >= 2; --n) {
    const double An = A(n);
    if (An == 0.0) continue;
    const double L = std::log(static_cast<double>(n));
    const double mag = An / L * std::exp(-s.sigma * L);
    re += mag * std::cos(s.t * L);
    im -= mag * std::sin(s.t * L);
  }
  EvalResult r;
  r.value = std::complex<double>(std::log(to_double(a1)) + re, im);
  r.n_used = N;
  if (a_growth && s.sigma > 1.0 + a_growth->eps) {
    r.tail_bound = series_tail_bound(*a_growth, s.sigma, N, 0);
  } else {
    r.tail_bound = kInf;
    r.certified = false;
  }
  return r;
}

}  // namespace zetadist
