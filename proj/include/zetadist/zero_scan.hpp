#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zetadist/arithmetic_function.hpp"
#include "zetadist/series.hpp"

namespace zetadist {

struct Rectangle {
  double sigma_min = 1.5;
  double sigma_max = 3.0;
  double t_min = 0.0;
  double t_max = 1.0;

  double width() const { return sigma_max - sigma_min; }
  double height() const { return t_max - t_min; }
};

enum class ScanStatus { certified, contour_too_close, tail_dominated };

std::string_view to_string(ScanStatus status);

// Zero count of Z inside a rectangle by the argument principle.
//
// "certified" is relative to the truncation tail bound and the quadrature
// error estimate: the truncated sum Z_N has `winding` zeros inside, and
// because |Z - Z_N| <= tail_bound < |Z_N| at every quadrature node, Z has the
// same count (Rouche). |Z_N| is only sampled at nodes; this is not interval
// arithmetic end to end.
struct ZeroScanReport {
  Rectangle rect;
  int winding = 0;
  std::complex<double> integral;  // (1 / 2 pi i) * contour integral of Z'/Z
  double min_modulus = 0.0;       // min |Z_N| over quadrature nodes
  double tail_bound = 0.0;
  double quadrature_error = 0.0;  // in winding units
  std::size_t truncation = 0;
  std::size_t evaluations = 0;
  ScanStatus status = ScanStatus::contour_too_close;
};

struct ScanOptions {
  double winding_tol = 1e-3;      // initial absolute tolerance on the winding number
  double min_winding_tol = 1e-10; // refinement floor near zeros
  std::size_t max_intervals = 20000;
  unsigned threads = 1;
};

// Counts zeros with multiplicity using the first N coefficients of a. a must
// carry a growth certificate and rect.sigma_min must exceed 1 + eps.
ZeroScanReport count_zeros(const NumericFunction& a, const Rectangle& rect, std::size_t N,
                           const ScanOptions& options = {});

ZeroScanReport count_zeros(const SeriesEvaluator& z, const GrowthCertificate& growth,
                           const Rectangle& rect, const ScanOptions& options = {});

// Bounded-height bracket for the zero-free abscissa.
//
// When a zero is found, [lo, hi] has width <= tol, the strip
// [lo, sigma_hi] x [-T, T] has winding >= 1 and [hi, sigma_hi] x [-T, T] has
// winding 0. Otherwise the bracket is degenerate at zero_free_from, the
// lowest left edge at which the strip could be certified zero-free. Nothing is
// claimed for |t| > T.
struct Sigma0Estimate {
  double lo = 0.0;
  double hi = 0.0;
  bool zero_found = false;
  bool conclusive = true;
  double height = 0.0;
  double sigma_hi = 0.0;
  double zero_free_from = 0.0;  // left edge of the certified zero-free strip
  double requested_floor = 0.0; // 1 + eps + tol
  std::size_t truncation = 0;
  std::string certificate;
  std::vector<ZeroScanReport> reports;
};

Sigma0Estimate estimate_sigma0(const NumericFunction& a, double T, double sigma_hi, double tol,
                               const ScanOptions& options = {});

// Leaf rectangles (no larger than min_size on either side) that contain zeros,
// found by recursive bisection of rect.
std::vector<ZeroScanReport> localize_zeros(const NumericFunction& a, const Rectangle& rect,
                                           std::size_t N, double min_size,
                                           const ScanOptions& options = {});

}  // namespace zetadist
