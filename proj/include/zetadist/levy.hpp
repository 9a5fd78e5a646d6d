#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetadist/arithmetic_function.hpp"
#include "zetadist/dirichlet.hpp"
#include "zetadist/zero_scan.hpp"

namespace zetadist {

struct Atom {
  std::uint64_t n = 0;
  double position = 0.0;  // -log n
  double mass = 0.0;      // A(n) / (n^sigma log n)
};

// Signed measure sum_n A(n) / (n^sigma log n) at -log n, for 2 <= n <= N.
struct QuasiLevyMeasure {
  std::vector<Atom> atoms;  // ascending n
  double sigma = 0.0;
  std::size_t truncation = 0;
  double tv_partial = 0.0;  // sum of |mass|
};

// Atom at n iff A(n) != 0 exactly.
QuasiLevyMeasure quasi_levy_measure(const ASequence<LogLinear>& A, double sigma);
QuasiLevyMeasure quasi_levy_measure(const ASequence<double>& A, double sigma);

// exp(sum mass * (exp(i t position) - 1)). a1 > 0 is required for the
// exponential form to describe Z(sigma + it) / Z(sigma).
std::complex<double> compound_poisson_cf(const QuasiLevyMeasure& m, double t, const Rational& a1);

struct CharacteristicCheck {
  bool is_cf = true;
  std::optional<std::uint64_t> witness;  // least n with a(n) < 0
};

// Z(sigma + it) / Z(sigma) is a characteristic function iff every a(n) >= 0.
CharacteristicCheck validate_characteristic(const ExactFunction& a);

enum class Verdict { case1, case2_1, case2_2, inconclusive };

std::string_view to_string(Verdict verdict);

struct ClassifyOptions {
  double height = 30.0;    // T
  double sigma_hi = 4.0;
  double tol = 1e-3;
  ScanOptions scan;
};

struct Classification {
  Verdict verdict = Verdict::inconclusive;
  std::optional<std::uint64_t> negative_witness;
  Sigma0Estimate sigma0;
  double height = 0.0;
  std::size_t scan_depth = 0;  // A-sign scan covers 2 <= n <= scan_depth
  std::vector<std::string> consequences;
  std::vector<std::string> notes;
  // max log(|A(n)| / log n) / log n over the upper half of the support; a
  // numerical hint about where the G-series converges, not a bound.
  std::optional<double> observed_growth_exponent;
};

// Trichotomy from the exact A-sign scan over a and a zero search on scan_fn
// (usually a longer numeric copy of a) up to height T. a must satisfy (A).
Classification classify(const ExactFunction& a, const NumericFunction& scan_fn,
                        const ClassifyOptions& options = {});

Classification classify(const ExactFunction& a, const ClassifyOptions& options = {});

}  // namespace zetadist
