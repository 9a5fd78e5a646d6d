#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "zetadist/arithmetic_function.hpp"
#include "zetadist/dirichlet.hpp"
#include "zetadist/series.hpp"

namespace zetadist {

// Law of X with P(X = -log n) = a(n) n^-sigma / Z(sigma), truncated to n <= N.
//
// The normaliser is the truncated sum Z_N(sigma), so the stored masses sum to
// one up to rounding; tail_mass_bound bounds the probability the untruncated
// law puts on n > N.
class ZetaDistribution {
 public:
  ZetaDistribution(std::vector<double> pmf, double sigma, EvalResult normalizer,
                   double tail_mass_bound);

  double pmf(std::size_t n) const { return pmf_[n - 1]; }
  std::span<const double> masses() const noexcept { return pmf_; }
  std::size_t truncation() const noexcept { return pmf_.size(); }
  double sigma() const noexcept { return sigma_; }
  const EvalResult& normalizer() const noexcept { return normalizer_; }
  double tail_mass_bound() const noexcept { return tail_mass_bound_; }

  // Least n with P(X >= -log n) >= u, i.e. inverse CDF over n ascending.
  std::size_t quantile_index(double u) const;

 private:
  std::vector<double> pmf_;
  std::vector<double> cdf_;
  double sigma_;
  EvalResult normalizer_;
  double tail_mass_bound_;
};

// Picks the smallest N <= min(|a|, cap) whose tail mass bound is <= tol.
ZetaDistribution build_distribution(const NumericFunction& a, double sigma, double tol);

// Fixed truncation N <= |a|.
ZetaDistribution build_distribution_truncated(const NumericFunction& a, double sigma,
                                              std::size_t N);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

// E[X] = -sum A(n) / n^sigma and Var[X] = sum A(n) log n / n^sigma, truncated
// at the length of A. The caller attests that sigma lies where these series
// represent Z'/Z and its derivative (right of every zero of Z).
Moments moments_analytic(const ASequence<double>& A, double sigma);

// Mean and variance of the stored truncated law.
Moments moments_direct(const ZetaDistribution& d);

inline constexpr std::string_view kSamplerAlgorithm = "mt19937_64, 65536-draw blocks, block i seeded with seed xor i";
inline constexpr std::size_t kSampleBlock = 65536;

struct SampleOptions {
  double max_tail_mass = 1e-12;
  unsigned threads = 1;
};

// Draws of -log n by inverse CDF over the renormalised truncated law. Output
// depends only on (distribution, count, seed), not on the thread count.
std::vector<double> sample(const ZetaDistribution& d, std::size_t count, std::uint64_t seed,
                           const SampleOptions& options = {});

}  // namespace zetadist
