#include "zetadist/zero_scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

namespace zetadist {

std::string_view to_string(ScanStatus status) {
  switch (status) {
    case ScanStatus::certified: return "certified";
    case ScanStatus::contour_too_close: return "contour-too-close";
    case ScanStatus::tail_dominated: return "tail-dominated";
  }
  return "?";
}

namespace {

using cplx = std::complex<double>;

// 15-point Kronrod nodes on [-1, 1] (positive half, descending) with the
// embedded 7-point Gauss rule on the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct EdgeResult {
  cplx integral;
  double error = 0.0;
  double min_modulus = std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
  bool aborted_tail = false;
  bool exhausted = false;
};

struct Interval {
  double a, b;
};

class EdgeIntegrator {
 public:
  EdgeIntegrator(const SeriesEvaluator& z, cplx from, cplx to, double tol, double tail_floor,
                 std::size_t max_intervals, std::atomic<bool>& abort)
      : z_(z), from_(from), delta_(to - from), tol_(tol), tail_floor_(tail_floor),
        max_intervals_(max_intervals), abort_(abort) {}

  EdgeResult run() {
    std::vector<Interval> work{{0.0, 1.0}};
    std::size_t processed = 0;
    while (!work.empty()) {
      if (abort_.load(std::memory_order_relaxed)) {
        out_.aborted_tail = true;
        return out_;
      }
      Interval iv = work.back();
      work.pop_back();
      double err = 0;
      bool tail_hit = false;
      cplx value = kronrod(iv.a, iv.b, err, tail_hit);
      if (tail_hit) {
        abort_.store(true, std::memory_order_relaxed);
        out_.aborted_tail = true;
        return out_;
      }
      const double allowed = tol_ * (iv.b - iv.a);
      if (err <= allowed || iv.b - iv.a < 1e-13) {
        out_.integral += value;
        out_.error += err;
        continue;
      }
      if (++processed > max_intervals_) {
        out_.exhausted = true;
        return out_;
      }
      const double mid = 0.5 * (iv.a + iv.b);
      work.push_back({mid, iv.b});
      work.push_back({iv.a, mid});
    }
    return out_;
  }

 private:
  cplx integrand(double u, bool& tail_hit) {
    auto v = z_.evaluate(from_ + u * delta_);
    ++out_.evaluations;
    const double m = std::abs(v.z);
    out_.min_modulus = std::min(out_.min_modulus, m);
    if (tail_floor_ > 0.0 && m <= tail_floor_) tail_hit = true;
    if (m == 0.0) return {};
    return v.dz / v.z * delta_;
  }

  cplx kronrod(double a, double b, double& err, bool& tail_hit) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx fc = integrand(c, tail_hit);
    cplx k = kWgk[7] * fc;
    cplx g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
      const double dx = h * kXgk[j];
      cplx f = integrand(c - dx, tail_hit) + integrand(c + dx, tail_hit);
      k += kWgk[j] * f;
      if (j % 2 == 1) g += kWg[j / 2] * f;
    }
    err = std::abs((k - g) * h);
    return k * h;
  }

  const SeriesEvaluator& z_;
  cplx from_;
  cplx delta_;
  double tol_;
  double tail_floor_;
  std::size_t max_intervals_;
  std::atomic<bool>& abort_;
  EdgeResult out_;
};

ZeroScanReport integrate_contour(const SeriesEvaluator& z, const Rectangle& r, double tail,
                                 double winding_tol, const ScanOptions& options) {
  // Counter-clockwise, left edge first since |Z| tends to be smallest there.
  const std::array<std::pair<cplx, cplx>, 4> edges = {{
      {{r.sigma_min, r.t_max}, {r.sigma_min, r.t_min}},
      {{r.sigma_min, r.t_min}, {r.sigma_max, r.t_min}},
      {{r.sigma_max, r.t_min}, {r.sigma_max, r.t_max}},
      {{r.sigma_max, r.t_max}, {r.sigma_min, r.t_max}},
  }};
  const double perimeter = 2.0 * (r.width() + r.height());
  // Integral tolerance per unit of the edge parameter.
  const double integral_tol = winding_tol * 2.0 * std::numbers::pi;
  std::atomic<bool> abort{false};
  const double tail_floor = 10.0 * tail;

  std::array<EdgeResult, 4> results;
  auto run_edge = [&](std::size_t i) {
    const double len = std::abs(edges[i].second - edges[i].first);
    EdgeIntegrator integ(z, edges[i].first, edges[i].second, integral_tol * len / perimeter,
                         tail_floor, options.max_intervals, abort);
    return integ.run();
  };
  if (options.threads > 1) {
    std::array<std::future<EdgeResult>, 4> futures;
    for (std::size_t i = 0; i < 4; ++i) futures[i] = std::async(std::launch::async, run_edge, i);
    for (std::size_t i = 0; i < 4; ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < 4; ++i) {
      results[i] = run_edge(i);
      if (results[i].aborted_tail || results[i].exhausted) break;
    }
  }

  ZeroScanReport report;
  report.rect = r;
  report.tail_bound = tail;
  report.truncation = z.truncation();
  report.min_modulus = std::numeric_limits<double>::infinity();
  cplx total = 0;
  double error = 0;
  bool aborted = false;
  bool exhausted = false;
  for (const auto& e : results) {
    total += e.integral;
    error += e.error;
    report.min_modulus = std::min(report.min_modulus, e.min_modulus);
    report.evaluations += e.evaluations;
    aborted = aborted || e.aborted_tail;
    exhausted = exhausted || e.exhausted;
  }
  report.integral = total / cplx(0.0, 2.0 * std::numbers::pi);
  report.quadrature_error = error / (2.0 * std::numbers::pi);
  report.winding = static_cast<int>(std::lround(report.integral.real()));
  if (aborted) {
    report.status = ScanStatus::tail_dominated;
  } else if (exhausted) {
    report.status = ScanStatus::contour_too_close;
  } else {
    const bool integral_ok = std::abs(report.integral.real() - report.winding) < 0.1 &&
                             std::abs(report.integral.imag()) < 0.1;
    const bool margin_ok = report.min_modulus > 10.0 * (tail + report.quadrature_error);
    if (integral_ok && margin_ok) {
      report.status = ScanStatus::certified;
    } else if (report.min_modulus <= 10.0 * tail) {
      report.status = ScanStatus::tail_dominated;
    } else {
      report.status = ScanStatus::contour_too_close;
    }
  }
  return report;
}

void check_rectangle(const Rectangle& r, const GrowthCertificate& g) {
  if (!(r.sigma_min < r.sigma_max) || !(r.t_min < r.t_max)) {
    throw Error(ErrorKind::invalid_argument, "rectangle needs sigma_min < sigma_max, t_min < t_max");
  }
  if (!(r.sigma_min > 1.0 + g.eps)) {
    throw Error(ErrorKind::out_of_domain, "rectangle must lie in sigma > 1 + eps");
  }
}

}  // namespace

ZeroScanReport count_zeros(const SeriesEvaluator& z, const GrowthCertificate& growth,
                           const Rectangle& rect, const ScanOptions& options) {
  check_rectangle(rect, growth);
  const double tail = series_tail_bound(growth, rect.sigma_min, z.truncation(), 0);
  double tol = options.winding_tol;
  ZeroScanReport report = integrate_contour(z, rect, tail, tol, options);
  std::size_t total_evals = report.evaluations;
  // Near a zero the winding tolerance is tightened until the quadrature error
  // is small against min |Z_N|.
  while (report.status == ScanStatus::contour_too_close && tol > options.min_winding_tol &&
         report.min_modulus > 0.0) {
    double next = std::max(options.min_winding_tol,
                           std::min(tol / 100.0, report.min_modulus / 100.0));
    if (!(next < tol)) break;
    tol = next;
    report = integrate_contour(z, rect, tail, tol, options);
    total_evals += report.evaluations;
  }
  report.evaluations = total_evals;
  return report;
}

ZeroScanReport count_zeros(const NumericFunction& a, const Rectangle& rect, std::size_t N,
                           const ScanOptions& options) {
  if (!a.growth()) {
    throw Error(ErrorKind::hypothesis_violation, "count_zeros needs a growth certificate");
  }
  check_rectangle(rect, *a.growth());
  SeriesEvaluator z(a, N);
  return count_zeros(z, *a.growth(), rect, options);
}

namespace {

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

Sigma0Estimate estimate_sigma0(const NumericFunction& a, double T, double sigma_hi, double tol,
                               const ScanOptions& options) {
  if (!a.growth()) {
    throw Error(ErrorKind::hypothesis_violation, "estimate_sigma0 needs a growth certificate");
  }
  const auto& g = *a.growth();
  if (!(T > 0.0)) throw Error(ErrorKind::invalid_argument, "height T must be > 0");
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tol must be > 0");
  const double base = 1.0 + g.eps;
  if (!(sigma_hi > base + tol)) {
    throw Error(ErrorKind::out_of_domain, "sigma_hi must exceed 1 + eps + tol");
  }

  SeriesEvaluator z(a);
  Sigma0Estimate est;
  est.height = T;
  est.sigma_hi = sigma_hi;
  est.requested_floor = base + tol;
  est.truncation = z.truncation();

  auto strip = [&](double left) { return Rectangle{left, sigma_hi, -T, T}; };
  // Scans the strip with left edge near `left`, nudging the edge within
  // (lower, upper) when the contour passes too close to a zero.
  auto scan = [&](double left, double lower, double upper) -> std::optional<ZeroScanReport> {
    const std::array<double, 7> offsets = {0.0, 0.125, -0.125, 0.25, -0.25, 0.375, -0.375};
    for (double off : offsets) {
      const double x = left + off * tol;
      if (!(x > lower) || !(x < upper)) continue;
      auto r = count_zeros(z, g, strip(x), options);
      est.reports.push_back(r);
      if (r.status != ScanStatus::contour_too_close) return r;
    }
    return std::nullopt;
  };

  // Lowest left edge where the truncation tail does not swamp |Z_N|.
  double left = base + tol;
  std::optional<ZeroScanReport> first;
  while (left < sigma_hi - tol) {
    const double tail = series_tail_bound(g, left, z.truncation(), 0);
    if (10.0 * tail < z.abs_sum(left)) {
      first = scan(left, base, sigma_hi);
      if (first && first->status == ScanStatus::certified) {
        left = first->rect.sigma_min;
        break;
      }
    }
    first.reset();
    left = base + 2.0 * (left - base);
  }

  const std::string height = "|t| <= " + format_double(T);
  if (!first) {
    est.conclusive = false;
    est.lo = est.hi = est.zero_free_from = sigma_hi;
    est.certificate = "inconclusive: no strip left edge in (" + format_double(base) + ", " +
                      format_double(sigma_hi) + ") could be certified at N = " +
                      std::to_string(z.truncation());
    return est;
  }

  if (first->winding == 0) {
    est.lo = est.hi = est.zero_free_from = left;
    est.certificate = "zero-free up to height " + format_double(T) + ": no zeros in [" +
                      format_double(left) + ", " + format_double(sigma_hi) + "] x " + height +
                      " (N = " + std::to_string(z.truncation()) + "); nothing is claimed for |t| > T";
    if (left > est.requested_floor) {
      est.certificate += "; the strip " + format_double(base) + " < sigma < " +
                         format_double(left) + " is not covered (truncation tail dominates)";
    }
    return est;
  }

  est.zero_found = true;
  double lo = left;
  double hi = sigma_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    auto r = scan(mid, lo, hi);
    if (!r || r->status != ScanStatus::certified) {
      est.conclusive = false;
      break;
    }
    (r->winding >= 1 ? lo : hi) = r->rect.sigma_min;
  }
  est.lo = lo;
  est.hi = hi;
  est.zero_free_from = hi;
  est.certificate = "zero with |t| <= " + format_double(T) + " in " + format_double(lo) +
                    " <= sigma < " + format_double(hi) + "; no zeros in [" + format_double(hi) +
                    ", " + format_double(sigma_hi) + "] x " + height + " (N = " +
                    std::to_string(z.truncation()) + "); nothing is claimed for |t| > T";
  if (!est.conclusive) est.certificate += "; bisection stopped early (contour too close)";
  return est;
}

std::vector<ZeroScanReport> localize_zeros(const NumericFunction& a, const Rectangle& rect,
                                           std::size_t N, double min_size,
                                           const ScanOptions& options) {
  if (!a.growth()) {
    throw Error(ErrorKind::hypothesis_violation, "localize_zeros needs a growth certificate");
  }
  SeriesEvaluator z(a, N);
  std::vector<ZeroScanReport> leaves;
  std::vector<Rectangle> work{rect};
  while (!work.empty()) {
    Rectangle r = work.back();
    work.pop_back();
    auto report = count_zeros(z, *a.growth(), r, options);
    if (report.status != ScanStatus::certified) {
      leaves.push_back(report);
      continue;
    }
    if (report.winding == 0) continue;
    if (std::max(r.width(), r.height()) <= min_size) {
      leaves.push_back(report);
      continue;
    }
    // Split the longer side; off-centre fractions avoid cutting through a zero.
    bool split_sigma = r.width() >= r.height();
    bool done = false;
    for (double frac : {0.5, 0.47, 0.53, 0.41, 0.59}) {
      Rectangle lo = r, hi = r;
      if (split_sigma) {
        lo.sigma_max = hi.sigma_min = r.sigma_min + frac * r.width();
      } else {
        lo.t_max = hi.t_min = r.t_min + frac * r.height();
      }
      auto rl = count_zeros(z, *a.growth(), lo, options);
      auto rh = count_zeros(z, *a.growth(), hi, options);
      if (rl.status == ScanStatus::certified && rh.status == ScanStatus::certified) {
        work.push_back(hi);
        work.push_back(lo);
        done = true;
        break;
      }
    }
    if (!done) leaves.push_back(report);
  }
  return leaves;
}

}  // namespace zetadist
