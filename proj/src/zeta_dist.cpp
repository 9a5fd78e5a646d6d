#include "zetadist/zeta_dist.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace zetadist {

ZetaDistribution::ZetaDistribution(std::vector<double> pmf, double sigma, EvalResult normalizer,
                                   double tail_mass_bound)
    : pmf_(std::move(pmf)), sigma_(sigma), normalizer_(normalizer),
      tail_mass_bound_(tail_mass_bound) {
  cdf_.resize(pmf_.size());
  double acc = 0;
  for (std::size_t i = 0; i < pmf_.size(); ++i) {
    acc += pmf_[i];
    cdf_[i] = acc;
  }
}

std::size_t ZetaDistribution::quantile_index(double u) const {
  const double target = u * cdf_.back();
  auto it = std::lower_bound(cdf_.begin(), cdf_.end(), target);
  if (it == cdf_.end()) --it;
  // Skip zero-mass atoms sitting on the same cumulative value.
  while (pmf_[static_cast<std::size_t>(it - cdf_.begin())] == 0.0 && it + 1 != cdf_.end()) ++it;
  return static_cast<std::size_t>(it - cdf_.begin()) + 1;
}

namespace {

void require_distribution(const NumericFunction& a, double sigma) {
  if (!satisfies_assumption_a(a)) {
    auto witness = first_negative(a);
    throw Error(ErrorKind::not_a_distribution,
                "coefficients must satisfy a(1) > 0 and a(n) >= 0 for Z(sigma+it)/Z(sigma) to be "
                "a characteristic function" +
                    (witness ? "; a(" + std::to_string(*witness) + ") < 0" : std::string()));
  }
  if (!a.growth()) {
    throw Error(ErrorKind::hypothesis_violation, "distribution needs a growth certificate");
  }
  if (!(sigma > 1.0 + a.growth()->eps)) {
    throw Error(ErrorKind::out_of_domain, "sigma must exceed 1 + eps of the growth certificate");
  }
}

}  // namespace

ZetaDistribution build_distribution_truncated(const NumericFunction& a, double sigma,
                                              std::size_t N) {
  require_distribution(a, sigma);
  if (N == 0 || N > a.size()) {
    throw Error(ErrorKind::invalid_length, "distribution truncation out of range");
  }
  std::vector<double> pmf(N, 0.0);
  for (std::size_t n = 1; n <= N; ++n) {
    if (a(n) != 0.0) pmf[n - 1] = a(n) * std::exp(-sigma * std::log(static_cast<double>(n)));
  }
  double total = 0;
  for (std::size_t n = N; n >= 1; --n) total += pmf[n - 1];
  for (auto& p : pmf) p /= total;

  EvalResult z;
  z.value = total;
  z.n_used = N;
  z.tail_bound = series_tail_bound(*a.growth(), sigma, N, 0);
  // Z(sigma) >= Z_N(sigma) for nonnegative coefficients.
  const double tail_mass = z.tail_bound / total;
  return ZetaDistribution(std::move(pmf), sigma, z, tail_mass);
}

ZetaDistribution build_distribution(const NumericFunction& a, double sigma, double tol) {
  require_distribution(a, sigma);
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tol must be > 0");
  // Z(sigma) >= a(1), so tail / a(1) <= tol is sufficient.
  const std::size_t limit = std::min(a.size(), truncation_cap());
  const std::size_t N = required_truncation(*a.growth(), sigma, tol * a(1), limit, 0);
  return build_distribution_truncated(a, sigma, std::min(N, a.size()));
}

Moments moments_analytic(const ASequence<double>& A, double sigma) {
  if (!(sigma > 1.0)) throw Error(ErrorKind::out_of_domain, "sigma must be > 1");
  double mean = 0, var = 0;
  for (std::size_t n = A.size(); n >= 2; --n) {
    const double An = A(n);
    if (An == 0.0) continue;
    const double L = std::log(static_cast<double>(n));
    const double w = An * std::exp(-sigma * L);
    mean -= w;
    var += w * L;
  }
  return {mean, var};
}

Moments moments_direct(const ZetaDistribution& d) {
  double m1 = 0, m2 = 0;
  const auto pmf = d.masses();
  for (std::size_t n = pmf.size(); n >= 2; --n) {
    const double p = pmf[n - 1];
    if (p == 0.0) continue;
    const double x = -std::log(static_cast<double>(n));
    m1 += p * x;
    m2 += p * x * x;
  }
  return {m1, m2 - m1 * m1};
}

std::vector<double> sample(const ZetaDistribution& d, std::size_t count, std::uint64_t seed,
                           const SampleOptions& options) {
  if (d.tail_mass_bound() > options.max_tail_mass) {
    throw Error(ErrorKind::resource,
                "tail mass bound " + message_number(d.tail_mass_bound()) +
                    " exceeds the sampling gate " + message_number(options.max_tail_mass));
  }
  std::vector<double> out(count);
  const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  auto run_block = [&](std::size_t b) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(b));
    const std::size_t begin = b * kSampleBlock;
    const std::size_t end = std::min(count, begin + kSampleBlock);
    for (std::size_t i = begin; i < end; ++i) {
      // 53 random bits to a double in [0, 1).
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      out[i] = 0.0 - std::log(static_cast<double>(d.quantile_index(u)));
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, blocks));
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < blocks; b += workers) run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace zetadist
