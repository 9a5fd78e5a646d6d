#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zetadist/dirichlet.hpp"
#include "zetadist/generators.hpp"
#include "zetadist/log_linear.hpp"
#include "zetadist/primes.hpp"

using namespace zetadist;

namespace {

ExactFunction from_vec(const oracle::Vec& v) { return ExactFunction(v, "random"); }

oracle::Vec to_vec(const ExactFunction& a) {
  return oracle::Vec(a.coefficients().begin(), a.coefficients().end());
}

ExactFunction from_ints(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.push_back(x);
  return ExactFunction(v);
}

LogLinear logs(std::initializer_list<std::pair<std::uint64_t, Rational>> terms) {
  LogLinear::Terms t;
  for (const auto& [p, c] : terms) t.emplace(p, c);
  return LogLinear::from_terms(t);
}

ExactFunction pointwise_sum(const ExactFunction& a, const ExactFunction& b) {
  std::vector<Rational> v(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) v[n - 1] = a(n) + b(n);
  return ExactFunction(v);
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("lowest terms and parsing") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(rational_power(2, -3) == make_rational(1, 8));
    CHECK(rational_power(3, 2) == 9);
  }
}

TEST_SUITE("primes") {
  TEST_CASE("factorisation and Moebius against trial oracle") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      std::map<std::uint64_t, int> mine;
      for (auto pp : factorize(n)) mine[pp.prime] = static_cast<int>(pp.exponent);
      REQUIRE(mine == oracle::exponents(n));
      REQUIRE(moebius(n) == oracle::moebius(n));
    }
    auto ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    CHECK(ps.back() == 97);
    CHECK(as_prime_power(64)->exponent == 6);
    CHECK_FALSE(as_prime_power(12));
    CHECK(is_perfect_square(144));
    CHECK_FALSE(is_squarefree(12));
  }
}

TEST_SUITE("identity_function") {
  TEST_CASE("shape") {
    CHECK(identity_function<Rational>(5) == from_ints({1, 0, 0, 0, 0}));
    CHECK(identity_function<Rational>(1) == from_ints({1}));
    CHECK_THROWS_AS(identity_function<Rational>(0), Error);
    try {
      identity_function<Rational>(0);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_length);
    }
  }
}

TEST_SUITE("dirichlet_convolve") {
  TEST_CASE("divisor count and identity law") {
    auto ones = generate<Rational>(GeneratorSpec::ones(), 12);
    auto d = dirichlet_convolve(ones, ones);
    CHECK(d(6) == 4);
    CHECK(d(12) == 6);
    CHECK(dirichlet_convolve(identity_function<Rational>(12), ones) == ones);
  }

  TEST_CASE("mismatched lengths truncate to the shorter") {
    auto a = generate<Rational>(GeneratorSpec::ones(), 10);
    auto b = generate<Rational>(GeneratorSpec::ones(), 7);
    CHECK(dirichlet_convolve(a, b).size() == 7);
    CHECK(dirichlet_convolve(b, a).size() == 7);
  }

  TEST_CASE("ezstar times its inverse is the identity up to 64") {
    auto a = generate<Rational>(GeneratorSpec::euler_zagier_star(), 64);
    auto inv = dirichlet_inverse(a);
    CHECK(to_vec(inv) == oracle::inverse(to_vec(a)));
    CHECK(dirichlet_convolve(a, inv) == identity_function<Rational>(64));
  }

  TEST_CASE("ring axioms on random rational functions") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t N = 1 + rng() % 64;
      auto a = from_vec(oracle::random_function(rng, N, false));
      auto b = from_vec(oracle::random_function(rng, N, false));
      auto c = from_vec(oracle::random_function(rng, N, false));
      auto ab = dirichlet_convolve(a, b);
      REQUIRE(to_vec(ab) == oracle::convolve(to_vec(a), to_vec(b)));
      REQUIRE(ab == dirichlet_convolve(b, a));
      REQUIRE(dirichlet_convolve(ab, c) == dirichlet_convolve(a, dirichlet_convolve(b, c)));
      REQUIRE(dirichlet_convolve(a, pointwise_sum(b, c)) ==
              pointwise_sum(ab, dirichlet_convolve(a, c)));
      REQUIRE(dirichlet_convolve(identity_function<Rational>(N), a) == a);
      REQUIRE(dirichlet_convolve(a, identity_function<Rational>(N)) == a);
    }
  }
}

TEST_SUITE("dirichlet_inverse") {
  TEST_CASE("ezstar values") {
    auto inv = dirichlet_inverse(generate<Rational>(GeneratorSpec::euler_zagier_star(), 8));
    CHECK(inv(1) == 1);
    CHECK(inv(2) == make_rational(-1, 2));
    CHECK(inv(3) == make_rational(-1, 2));
    CHECK(inv(4) == make_rational(-3, 4));
    CHECK(inv(6) == 0);
  }

  TEST_CASE("identity and Moebius") {
    CHECK(dirichlet_inverse(identity_function<Rational>(9)) == identity_function<Rational>(9));
    auto mu = dirichlet_inverse(generate<Rational>(GeneratorSpec::ones(), 100));
    for (std::uint64_t n = 1; n <= 100; ++n) REQUIRE(mu(n) == oracle::moebius(n));
  }

  TEST_CASE("a(1) = 0 is not invertible") {
    auto a = from_ints({0, 1, 1});
    try {
      dirichlet_inverse(a);
      FAIL("expected non-invertible error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::non_invertible);
    }
  }

  TEST_CASE("inverse law and involution on random functions") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t N = 1 + rng() % 64;
      auto a = from_vec(oracle::random_function(rng, N, true));
      auto inv = dirichlet_inverse(a);
      REQUIRE(dirichlet_convolve(a, inv) == identity_function<Rational>(N));
      REQUIRE(dirichlet_inverse(inv) == a);
    }
  }
}

TEST_SUITE("sharp") {
  TEST_CASE("log twist") {
    std::vector<Rational> v(12, 1);
    v[11] = make_rational(1, 2);
    auto s = sharp(ExactFunction(v));
    CHECK(s[11] == logs({{2, 1}, {3, make_rational(1, 2)}}));
    CHECK(s[0].is_zero());
    auto ones = sharp(generate<Rational>(GeneratorSpec::ones(), 8));
    CHECK(ones[7] == logs({{2, 3}}));
  }
}

TEST_SUITE("compute_A") {
  TEST_CASE("ones: 1/r at prime powers") {
    auto A = compute_A(generate<Rational>(GeneratorSpec::ones(), 64));
    CHECK(A(8) == LogLinear::log_of(2));
    CHECK(A(9) == LogLinear::log_of(3));
    CHECK(A(6).is_zero());
    CHECK(A(1).is_zero());
  }

  TEST_CASE("ezstar values") {
    auto A = compute_A(generate<Rational>(GeneratorSpec::euler_zagier_star(), 12));
    CHECK(A(4) == LogLinear::log_of(4) * make_rational(7, 8));
    CHECK(A(6) == LogLinear::log_of(6) * make_rational(1, 4));
    CHECK(A(12) == logs({{2, make_rational(-1, 4)}, {3, make_rational(-1, 8)}}));
    // The stated list gives A(8) = (1/8) log 8 while the worked derivation of
    // the same value ends in (1/8) log 2. The exact recursion gives the latter.
    CHECK(A(8) == logs({{2, make_rational(1, 8)}}));
    CHECK(A(8) != LogLinear::log_of(8) * make_rational(1, 8));
    // a(p) = 1/2 and a^-1(1) = 1, so A(p) = (1/2) log p. The stated list has
    // log p at p = 2, 3, 5, 7, which the recursion does not support.
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      CHECK(A(p) == LogLinear::log_of(p) * make_rational(1, 2));
    }
  }

  TEST_CASE("matches the definition oracle on random invertible functions") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t N = 2 + rng() % 48;
      auto v = oracle::random_function(rng, N, true);
      auto A = compute_A(from_vec(v));
      auto want = oracle::A(v);
      for (std::size_t n = 2; n <= N; ++n) REQUIRE(A(n).terms() == want[n]);
    }
  }

  TEST_CASE("completely multiplicative n^alpha: a(p)^r / r") {
    for (long alpha : {0L, -1L, -2L, -3L}) {
      auto A = compute_A(generate<Rational>(GeneratorSpec::power(alpha), 64));
      for (std::uint64_t n = 2; n <= 64; ++n) {
        auto pp = as_prime_power(n);
        Rational want = 0;
        if (pp) want = rational_power(pp->prime, alpha * static_cast<long>(pp->exponent)) /
                       static_cast<long>(pp->exponent);
        REQUIRE(A(n) == LogLinear::log_of(n) * want);
      }
    }
  }

  TEST_CASE("d_k: k / r at prime powers") {
    for (unsigned k : {2u, 3u, 4u}) {
      auto A = compute_A(generate<Rational>(GeneratorSpec::divisor(k), 64));
      for (std::uint64_t n = 2; n <= 64; ++n) {
        auto pp = as_prime_power(n);
        Rational want = pp ? make_rational(k, pp->exponent) : Rational(0);
        REQUIRE(A(n) == LogLinear::log_of(n) * want);
      }
    }
  }

  TEST_CASE("scale invariance") {
    auto a = generate<Rational>(GeneratorSpec::euler_zagier_star(), 64);
    std::vector<Rational> scaled(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : scaled) x *= make_rational(7, 3);
    CHECK(compute_A(ExactFunction(scaled)) == compute_A(a));
  }

  TEST_CASE("repeatable") {
    auto a = generate<Rational>(GeneratorSpec::divisor(3), 128);
    auto A1 = compute_A(a), A2 = compute_A(a);
    for (std::size_t n = 2; n <= 128; ++n) REQUIRE(A1(n).to_string() == A2(n).to_string());
  }

  TEST_CASE("numeric lane agrees with exact lane") {
    auto a = generate<Rational>(GeneratorSpec::euler_zagier_star(), 300);
    auto exact = compute_A(a);
    auto numeric = compute_A(to_numeric(a));
    for (std::size_t n = 2; n <= 300; ++n) {
      REQUIRE(numeric(n) == doctest::Approx(exact(n).to_double()).epsilon(1e-12));
    }
  }
}

TEST_SUITE("sign_of") {
  TEST_CASE("exact and interval cases") {
    CHECK(sign_of(LogLinear{}) == Sign::zero);
    CHECK(sign_of(logs({{2, make_rational(-1, 4)}, {3, make_rational(-1, 8)}})) ==
          Sign::negative);
    CHECK(sign_of(logs({{2, 1}, {3, make_rational(-1, 2)}})) == Sign::positive);
    // log 8 - log 7 > 0 and log 7 - log 8 < 0 need interval evaluation.
    CHECK(sign_of(logs({{2, 3}, {7, -1}})) == Sign::positive);
    CHECK(sign_of(logs({{2, -3}, {7, 1}})) == Sign::negative);
    // 2^10 = 1024 vs 1021 (prime): about 3e-3 apart.
    CHECK(sign_of(logs({{2, 10}, {1021, -1}})) == Sign::positive);
    // 3^12 = 531441 vs 2^19 = 524288 mixed with a tiny rational offset.
    CHECK(sign_of(logs({{2, -19}, {3, 12}})) == Sign::positive);
  }

  TEST_CASE("agrees with double evaluation away from zero") {
    std::mt19937_64 rng(9);
    const std::uint64_t ps[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 500; ++i) {
      LogLinear::Terms t;
      for (auto p : ps) {
        auto c = oracle::random_rational(rng);
        if (c != 0) t.emplace(p, c);
      }
      auto x = LogLinear::from_terms(t);
      const double v = x.to_double();
      if (std::abs(v) < 1e-9) continue;
      REQUIRE(sign_of(x) == (v > 0 ? Sign::positive : Sign::negative));
    }
  }
}
