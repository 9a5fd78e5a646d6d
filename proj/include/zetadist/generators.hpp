#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "zetadist/arithmetic_function.hpp"
#include "zetadist/dirichlet.hpp"
#include "zetadist/primes.hpp"

namespace zetadist {

// The example families. CLI names:
//   ones, pow:<alpha>, dk:<k>, oneplusq:<q>[:<c>], absmu, ezstar
struct GeneratorSpec {
  enum class Kind { ones, power, divisor, one_plus_q, abs_moebius, euler_zagier_star };

  Kind kind = Kind::ones;
  Rational alpha = 0;     // power: a(n) = n^alpha, alpha <= 0
  unsigned k = 2;         // divisor: d_k, k >= 2
  std::uint64_t q = 2;    // one_plus_q: a(1) = 1, a(q) = c
  Rational c = 1;

  static GeneratorSpec ones() { return {}; }
  static GeneratorSpec power(Rational alpha);
  static GeneratorSpec divisor(unsigned k);
  static GeneratorSpec one_plus_q(std::uint64_t q, Rational c = 1);
  static GeneratorSpec abs_moebius();
  static GeneratorSpec euler_zagier_star();
};

GeneratorSpec parse_generator(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

// Rejects specs outside the families' parameter ranges.
void validate(const GeneratorSpec& spec);

// |a(n)| <= C n^eps for the family. For d_k the constant is the product over
// small primes of max_e binom(e+k-1, k-1) / p^(e*eps) at eps = 0.45.
GrowthCertificate growth_certificate(const GeneratorSpec& spec);

// One representative of every family, used by the cross-family checks.
std::vector<GeneratorSpec> standard_generators();

namespace detail {

template <class Scalar>
Scalar from_rational(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return to_double(r);
  } else {
    return r;
  }
}

std::vector<bool> squarefree_sieve(std::size_t N);

}  // namespace detail

template <class Scalar>
ArithmeticFunction<Scalar> generate(const GeneratorSpec& spec, std::size_t N) {
  using Kind = GeneratorSpec::Kind;
  validate(spec);
  if (N == 0) throw Error(ErrorKind::invalid_length, "generate: N must be >= 1");
  std::vector<Scalar> c(N, Scalar(0));
  switch (spec.kind) {
    case Kind::ones:
      std::fill(c.begin(), c.end(), Scalar(1));
      break;
    case Kind::power: {
      const long e = -spec.alpha.get_num().get_si();
      for (std::size_t n = 1; n <= N; ++n) {
        if constexpr (std::is_same_v<Scalar, double>) {
          c[n - 1] = std::pow(static_cast<double>(n), -static_cast<double>(e));
        } else {
          c[n - 1] = rational_power(n, -e);
        }
      }
      break;
    }
    case Kind::divisor: {
      std::vector<Scalar> ones(N, Scalar(1));
      ArithmeticFunction<Scalar> one_fn(ones);
      ArithmeticFunction<Scalar> acc = one_fn;
      for (unsigned i = 1; i < spec.k; ++i) acc = dirichlet_convolve(acc, one_fn);
      c.assign(acc.coefficients().begin(), acc.coefficients().end());
      break;
    }
    case Kind::one_plus_q:
      c[0] = Scalar(1);
      if (spec.q <= N) c[spec.q - 1] = detail::from_rational<Scalar>(spec.c);
      break;
    case Kind::abs_moebius: {
      auto sf = detail::squarefree_sieve(N);
      for (std::size_t n = 1; n <= N; ++n) c[n - 1] = sf[n] ? Scalar(1) : Scalar(0);
      break;
    }
    case Kind::euler_zagier_star: {
      const Scalar half = detail::from_rational<Scalar>(Rational(1, 2));
      std::fill(c.begin(), c.end(), half);
      for (std::size_t m = 1; m * m <= N; ++m) c[m * m - 1] = Scalar(1);
      break;
    }
  }
  return ArithmeticFunction<Scalar>(std::move(c), to_string(spec), growth_certificate(spec));
}

}  // namespace zetadist
