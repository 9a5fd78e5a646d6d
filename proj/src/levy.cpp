#include "zetadist/levy.hpp"

#include <cmath>
#include <cstdio>

namespace zetadist {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double atom_weight(std::uint64_t n, double sigma) {
  return std::exp(-sigma * std::log(static_cast<double>(n)));
}

void finish(QuasiLevyMeasure& m) {
  m.tv_partial = 0;
  for (auto it = m.atoms.rbegin(); it != m.atoms.rend(); ++it) m.tv_partial += std::abs(it->mass);
}

}  // namespace

QuasiLevyMeasure quasi_levy_measure(const ASequence<LogLinear>& A, double sigma) {
  if (!(sigma > 1.0)) throw Error(ErrorKind::out_of_domain, "sigma must be > 1");
  QuasiLevyMeasure m;
  m.sigma = sigma;
  m.truncation = A.size();
  for (std::size_t n = 2; n <= A.size(); ++n) {
    const LogLinear& An = A(n);
    if (An.is_zero()) continue;
    const double L = std::log(static_cast<double>(n));
    // A(n) / log n is usually rational; use it exactly when it is.
    const auto r = An.ratio_to_log(n);
    const double ratio = r ? to_double(*r) : An.to_double() / L;
    m.atoms.push_back({n, -L, ratio * atom_weight(n, sigma)});
  }
  finish(m);
  return m;
}

QuasiLevyMeasure quasi_levy_measure(const ASequence<double>& A, double sigma) {
  if (!(sigma > 1.0)) throw Error(ErrorKind::out_of_domain, "sigma must be > 1");
  QuasiLevyMeasure m;
  m.sigma = sigma;
  m.truncation = A.size();
  for (std::size_t n = 2; n <= A.size(); ++n) {
    if (A(n) == 0.0) continue;
    const double L = std::log(static_cast<double>(n));
    m.atoms.push_back({n, -L, A(n) / L * atom_weight(n, sigma)});
  }
  finish(m);
  return m;
}

std::complex<double> compound_poisson_cf(const QuasiLevyMeasure& m, double t, const Rational& a1) {
  if (a1 <= 0) throw Error(ErrorKind::log_undefined, "compound Poisson form needs a(1) > 0");
  double re = 0, im = 0;
  for (auto it = m.atoms.rbegin(); it != m.atoms.rend(); ++it) {
    const double x = t * it->position;
    re += it->mass * (std::cos(x) - 1.0);
    im += it->mass * std::sin(x);
  }
  return std::exp(std::complex<double>(re, im));
}

CharacteristicCheck validate_characteristic(const ExactFunction& a) {
  bool any = false;
  for (const auto& c : a.coefficients()) any = any || sgn(c) != 0;
  if (!any) {
    throw Error(ErrorKind::hypothesis_violation, "all coefficients are zero");
  }
  CharacteristicCheck out;
  out.witness = first_negative(a);
  out.is_cf = !out.witness;
  return out;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::case1: return "case1";
    case Verdict::case2_1: return "case2_1";
    case Verdict::case2_2: return "case2_2";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::optional<double> growth_exponent(const ASequence<LogLinear>& A) {
  const std::size_t N = A.size();
  std::optional<double> best;
  for (std::size_t n = std::max<std::size_t>(2, static_cast<std::size_t>(std::sqrt(N))); n <= N;
       ++n) {
    if (A(n).is_zero()) continue;
    const double L = std::log(static_cast<double>(n));
    const double v = std::abs(A(n).to_double()) / L;
    const double e = std::log(v) / L;
    if (!best || e > *best) best = e;
  }
  return best;
}

}  // namespace

Classification classify(const ExactFunction& a, const NumericFunction& scan_fn,
                        const ClassifyOptions& options) {
  if (!satisfies_assumption_a(a)) {
    throw Error(ErrorKind::not_a_distribution,
                "classification needs a(1) > 0 and a(n) >= 0 for every n");
  }
  Classification out;
  out.height = options.height;
  out.scan_depth = a.size();

  const auto A = compute_A(a);
  if (auto w = first_negative(A)) out.negative_witness = *w;
  out.observed_growth_exponent = growth_exponent(A);

  out.sigma0 = estimate_sigma0(scan_fn, options.height, options.sigma_hi, options.tol,
                               options.scan);
  const auto& est = out.sigma0;
  const std::string depth = "A(n) scanned exactly for 2 <= n <= " + std::to_string(out.scan_depth);
  const std::string height = "|t| <= " + fmt(options.height);

  if (est.zero_found) {
    out.verdict = Verdict::case1;
    out.consequences = {
        "certified zero of Z with sigma in [" + fmt(est.lo) + ", " + fmt(est.hi) + "] and " +
            height,
        "not pretended infinitely divisible on the zero line sigma = sigma0 in [" + fmt(est.lo) +
            ", " + fmt(est.hi) + "]",
        "pretended infinitely divisible for sigma > sigma0",
        "quasi infinitely divisible for sigma > sigma0 + 1 (sigma > " + fmt(est.hi + 1.0) + ")",
    };
    if (!out.negative_witness) {
      out.notes.push_back("no negative A(n) found up to N although a zero was certified; the "
                          "scan depth is too small to exhibit the sign change");
    }
  } else if (!est.conclusive) {
    out.verdict = Verdict::inconclusive;
    out.notes.push_back("zero scan could not certify any strip: " + est.certificate);
  } else if (out.negative_witness) {
    out.verdict = Verdict::case2_1;
    out.consequences = {
        "A(" + std::to_string(*out.negative_witness) + ") < 0, so not infinitely divisible",
        "no zeros of Z in [" + fmt(est.zero_free_from) + ", " + fmt(est.sigma_hi) + "] x " +
            "[-" + fmt(options.height) + ", " + fmt(options.height) + "]",
        "quasi infinitely divisible for all sigma > 2",
    };
  } else {
    out.verdict = Verdict::case2_2;
    out.consequences = {
        "no negative A(n) up to N = " + std::to_string(out.scan_depth) + " (evidence, not proof)",
        "compound Poisson with finite Levy measure for all sigma > 1",
    };
    out.notes.push_back("case2_2 is tested as A(n) >= 0; the strict A(n) > 0 form fails for "
                        "functions with vanishing A(n), e.g. A(6) = 0 for the Riemann zeta "
                        "function");
  }
  out.notes.push_back(depth);
  out.notes.push_back("zero search limited to " + height + ": " + est.certificate);
  if (out.observed_growth_exponent) {
    out.notes.push_back("observed growth exponent of |A(n)| / log n: " +
                        fmt(*out.observed_growth_exponent) + " (numerical)");
  }
  return out;
}

Classification classify(const ExactFunction& a, const ClassifyOptions& options) {
  return classify(a, to_numeric(a), options);
}

}  // namespace zetadist
