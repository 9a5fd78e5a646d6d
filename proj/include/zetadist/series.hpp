#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "zetadist/arithmetic_function.hpp"
#include "zetadist/dirichlet.hpp"

namespace zetadist {

// s = sigma + i t with sigma > 1.
struct EvalPoint {
  double sigma = 2.0;
  double t = 0.0;

  std::complex<double> s() const { return {sigma, t}; }
};

struct EvalResult {
  std::complex<double> value;
  // Bound on |sum_{n > N} ...|; +inf when no certificate is available.
  double tail_bound = 0.0;
  std::size_t n_used = 0;
  // False when tail_bound is +inf (no certificate, or a heuristic series).
  bool certified = true;
};

inline constexpr std::size_t kDefaultTruncation = 100000;
inline constexpr double kDerivativeDelta = 0.1;

// 10^7, or the value of the ZETADIST_N_CAP environment variable when set.
std::size_t truncation_cap();

// C * (N^(1+eps-sigma) / (sigma-eps-1) + N^(eps-sigma)), which dominates
// sum_{n > N} C n^(eps-sigma) by comparison with the integral from N.
double tail_bound(double C, double eps, double sigma, std::size_t N);

// Certificate for |a(n) log^order n|: eps grows by delta and C by
// max_n log^order(n) / n^delta = (order / (delta e))^order.
GrowthCertificate derivative_certificate(const GrowthCertificate& g, int order, double delta);

// Tail of sum a(n) (-log n)^order n^-s for sigma > 1 + eps. Zero when the
// certificate's support ends at or before N. For order > 0 delta is
// min(kDerivativeDelta, (sigma - 1 - eps) / 2).
double series_tail_bound(const GrowthCertificate& g, double sigma, std::size_t N, int order = 0);

// Smallest N (searched by doubling from 1024, then bisected) whose tail bound
// is <= tol. Throws a resource error if the cap is not enough.
std::size_t required_truncation(const GrowthCertificate& g, double sigma, double tol,
                                std::size_t cap, int order = 0);

// Precomputed nonzero terms of a truncated Dirichlet series. Terms are summed
// from large n to small n to keep rounding error low.
class SeriesEvaluator {
 public:
  explicit SeriesEvaluator(const NumericFunction& a, std::size_t N = 0);

  struct Values {
    std::complex<double> z;   // Z(s)
    std::complex<double> dz;  // Z'(s)
  };

  Values evaluate(std::complex<double> s) const;

  // sum a(n) (-log n)^order n^-s for order in {0, 1, 2}.
  std::complex<double> value(std::complex<double> s, int order) const;

  // sum |a(n)| n^-sigma, which bounds |Z_N(sigma + it)| for every t.
  double abs_sum(double sigma) const;

  std::size_t truncation() const noexcept { return N_; }

 private:
  std::size_t N_ = 0;
  std::vector<double> coeff_;
  std::vector<double> log_n_;
};

EvalResult evaluate_Z(const NumericFunction& a, EvalPoint s, int order = 0);
EvalResult evaluate_Z(const NumericFunction& a, EvalPoint s, int order, std::size_t N);

struct CfResult {
  std::complex<double> value;
  // False when some a(n) < 0; then the ratio is not a characteristic function.
  bool characteristic = true;
};

// Z(sigma + it) / Z(sigma), both at the full length of a.
CfResult evaluate_cf(const NumericFunction& a, double sigma, double t);

// G(s) = log a(1) + sum_{2 <= n <= N} (A(n) / log n) n^-s. The tail is bounded
// only when a certificate for |A(n) / log n| is supplied.
EvalResult evaluate_G(const ASequence<double>& A, const Rational& a1, EvalPoint s,
                      const std::optional<GrowthCertificate>& a_growth = std::nullopt);

}  // namespace zetadist
