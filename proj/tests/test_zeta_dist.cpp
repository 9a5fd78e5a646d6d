#include <algorithm>
#include <complex>
#include <numeric>

#include "doctest.h"
#include "reference_values.hpp"
#include "zetadist/generators.hpp"
#include "zetadist/zeta_dist.hpp"

using namespace zetadist;

TEST_SUITE("build_distribution") {
  TEST_CASE("two-point law") {
    auto d = build_distribution(generate<double>(GeneratorSpec::one_plus_q(2), 64), 2, 1e-12);
    CHECK(d.pmf(1) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(d.pmf(2) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(d.tail_mass_bound() == 0.0);
    CHECK(d.truncation() == 2);
  }

  TEST_CASE("ones at sigma 2: P(X = 0) = 1/zeta(2)") {
    auto d = build_distribution(generate<double>(GeneratorSpec::ones(), 10000000), 2, 1e-6);
    CHECK(std::abs(d.pmf(1) - 1 / ref::zeta2) <= d.tail_mass_bound() + 1e-15);
  }

  // Uses H(3) = (zeta(3)^2 + zeta(6)) / 2, which belongs to the coefficients
  // (d(n) + [n square]) / 2 rather than the generated ones; see the next case.
  TEST_CASE("ezstar at sigma 3: P(X = 0) = 1/H(3)" * doctest::should_fail()) {
    auto d = build_distribution(generate<double>(GeneratorSpec::euler_zagier_star(), 1000000), 3,
                                1e-10);
    CHECK(std::abs(d.pmf(1) - 1 / ref::H3) <= d.tail_mass_bound() + 1e-14);
  }

  TEST_CASE("ezstar at sigma 3: P(X = 0) = 2 / (zeta(3) + zeta(6))") {
    auto d = build_distribution(generate<double>(GeneratorSpec::euler_zagier_star(), 1000000), 3,
                                1e-10);
    CHECK(std::abs(d.pmf(1) - 2 / (ref::zeta3 + ref::zeta6)) <= d.tail_mass_bound() + 1e-14);
  }

  TEST_CASE("near-normalisation for every family") {
    for (const auto& spec : standard_generators()) {
      auto a = generate<double>(spec, 200000);
      for (double sigma : {1.5, 2.0, 3.0}) {
        CAPTURE(to_string(spec));
        CAPTURE(sigma);
        auto d = build_distribution_truncated(a, sigma, a.size());
        double total = 0;
        for (double p : d.masses()) {
          REQUIRE(p >= 0.0);
          total += p;
        }
        CHECK(total <= 1 + 1e-12);
        CHECK(total + d.tail_mass_bound() >= 1 - 1e-12);
      }
    }
  }

  TEST_CASE("errors") {
    NumericFunction signed_fn({1.0, -0.5, 0.0}, "signed", GrowthCertificate{1, 0, 3});
    try {
      build_distribution(signed_fn, 2, 1e-6);
      FAIL("expected not-a-distribution");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_a_distribution);
    }
    try {
      build_distribution(generate<double>(GeneratorSpec::ones(), 1000), 2, 1e-12);
      FAIL("expected resource error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::resource);
    }
    CHECK_THROWS_AS(build_distribution(generate<double>(GeneratorSpec::divisor(2), 100), 1.3, 0.1),
                    Error);
  }
}

TEST_SUITE("moments") {
  TEST_CASE("two-point law: analytic and direct") {
    auto a = generate<double>(GeneratorSpec::one_plus_q(2), 1 << 20);
    auto an = moments_analytic(compute_A(a), 2);
    CHECK(std::abs(an.mean + ref::log2_over_5) < 1e-12);
    // Var = 0.8 * 0.2 * log(2)^2
    const double var = 0.16 * std::log(2.0) * std::log(2.0);
    // A(2^k) n^-2 terms are geometric in 1/4; past 2^20 the variance terms
    // k log(2)^2 4^-k still sum to about 2.4e-12.
    CHECK(std::abs(an.variance - var) < 3e-12);
    auto di = moments_direct(build_distribution(a, 2, 1e-12));
    CHECK(std::abs(di.mean + ref::log2_over_5) < 1e-15);
    CHECK(std::abs(di.variance - var) < 1e-15);
  }

  TEST_CASE("ones at sigma 2 against zeta'/zeta") {
    auto a = generate<double>(GeneratorSpec::ones(), 10000000);
    auto an = moments_analytic(compute_A(a), 2);
    auto di = moments_direct(build_distribution_truncated(a, 2, a.size()));
    CHECK(std::abs(an.mean - di.mean) < 1e-6);
    CHECK(std::abs(an.mean - ref::ones_moments[1].mean) < 1e-5);
  }

  TEST_CASE("mean rises and variance falls toward 0 in sigma") {
    auto a = generate<double>(GeneratorSpec::ones(), 1000000);
    const auto A = compute_A(a);
    Moments prev{-1e9, 1e9};
    for (const auto& r : ref::ones_moments) {
      auto m = moments_analytic(A, r.sigma);
      CHECK(m.mean > prev.mean);
      CHECK(m.variance < prev.variance);
      CHECK(m.mean < 0);
      CHECK(m.variance > 0);
      // Truncation at 10^6 is visible at sigma = 1.5 only.
      const double slack = r.sigma < 2 ? 5e-2 : 1e-4;
      CHECK(std::abs(m.mean - r.mean) < slack);
      CHECK(std::abs(m.variance - r.variance) < slack * 10);
      prev = m;
    }
    auto far = moments_analytic(A, 60);
    CHECK(std::abs(far.mean) < 1e-17);
    CHECK(std::abs(far.variance) < 1e-17);
  }

  TEST_CASE("direct and analytic agree at sigma 3 for every family") {
    for (const auto& spec : standard_generators()) {
      CAPTURE(to_string(spec));
      const std::size_t N = spec.kind == GeneratorSpec::Kind::one_plus_q ? 1u << 20 : 200000u;
      auto a = generate<double>(spec, N);
      auto d = build_distribution_truncated(a, 3, a.size());
      auto an = moments_analytic(compute_A(a), 3);
      auto di = moments_direct(d);
      // Truncation effects: log-weighted tail mass over Z plus the A tail.
      // For 1 + c q^-s the A series is geometric in r = c q^-sigma and has
      // no finite support, so its tail is added separately.
      double geometric = 0;
      if (spec.kind == GeneratorSpec::Kind::one_plus_q) {
        const double lq = std::log(double(spec.q)), r = spec.c.get_d() * std::pow(spec.q, -3.0);
        const double K1 = std::floor(std::log(double(N)) / lq) + 1;
        geometric = lq * lq * K1 * std::pow(r, K1) / ((1 - r) * (1 - r));
      }
      const double tail = 10 * (series_tail_bound(*a.growth(), 3, N, 2) + geometric + 1e-9);
      CHECK(std::abs(an.mean - di.mean) < tail);
      CHECK(std::abs(an.variance - di.variance) < tail);
    }
  }

  TEST_CASE("point mass") {
    NumericFunction delta({1.0, 0.0, 0.0, 0.0}, "I", GrowthCertificate{1, 0, 1});
    auto m = moments_direct(build_distribution_truncated(delta, 2, 4));
    CHECK(m.mean == 0.0);
    CHECK(m.variance == 0.0);
  }
}

TEST_SUITE("sample") {
  TEST_CASE("two-point frequencies and determinism") {
    auto d = build_distribution(generate<double>(GeneratorSpec::one_plus_q(2), 64), 2, 1e-12);
    const std::size_t n = 1000000;
    auto xs = sample(d, n, 12345);
    const double zeros = std::count(xs.begin(), xs.end(), 0.0);
    CHECK(std::abs(zeros / n - 0.8) < 3 * std::sqrt(0.8 * 0.2 / n));
    CHECK(xs == sample(d, n, 12345));
    SampleOptions four;
    four.threads = 4;
    CHECK(xs == sample(d, n, 12345, four));
    CHECK(xs != sample(d, n, 12346));
  }

  TEST_CASE("refuses a heavy tail") {
    auto d = build_distribution_truncated(generate<double>(GeneratorSpec::ones(), 1000), 2, 1000);
    try {
      sample(d, 10, 1);
      FAIL("expected refusal");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::resource);
    }
  }

  TEST_CASE("ones at sigma 2: mean and empirical characteristic function") {
    // A 1e-12 tail mass at sigma = 2 needs N near 1e12, past the 1e7 cap.
    // With N = 1e7 the omitted mass is below 1e-7, far inside the 3/sqrt(n)
    // and 4/sqrt(n) bands, so the gate is relaxed to that level here.
    auto a = generate<double>(GeneratorSpec::ones(), 10000000);
    auto d = build_distribution_truncated(a, 2, a.size());
    REQUIRE(d.tail_mass_bound() < 1e-7);
    SampleOptions opts;
    opts.max_tail_mass = 1e-7;
    const std::size_t n = 1000000;
    auto xs = sample(d, n, 2024, opts);
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double se = std::sqrt(ref::ones_moments[1].variance / n);
    CHECK(std::abs(mean - ref::ones_moments[1].mean) < 3 * se);

    const SeriesEvaluator ev(a);
    const auto z0 = ev.value({2, 0}, 0);
    for (double t : {1.0, -1.0, 2.0, -2.0, 5.0, -5.0}) {
      std::complex<double> emp = 0;
      for (double x : xs) emp += std::polar(1.0, t * x);
      emp /= double(n);
      CHECK(std::abs(emp - ev.value({2, t}, 0) / z0) < 4 / std::sqrt(double(n)));
    }
  }
}
