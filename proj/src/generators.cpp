#include "zetadist/generators.hpp"

#include <charconv>
#include <cmath>

namespace zetadist {

namespace {

constexpr double kDivisorEps = 0.45;

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::invalid_argument,
                "generator: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double divisor_growth_constant(unsigned k, double eps) {
  // d_k(p^e) = binom(e+k-1, k-1) <= k^e, so primes with p^eps >= k contribute
  // a factor of at most 1 to d_k(n) / n^eps.
  const auto limit = static_cast<std::uint64_t>(std::pow(static_cast<double>(k), 1.0 / eps));
  double C = 1.0;
  for (auto p : primes_up_to(limit + 1)) {
    const double pe = std::pow(static_cast<double>(p), eps);
    if (pe >= k) continue;
    double best = 1.0;
    double binom = 1.0;
    for (unsigned e = 1; e < 4096; ++e) {
      binom = binom * (e + k - 1) / e;
      double value = binom / std::pow(pe, e);
      best = std::max(best, value);
      if ((e + k) / (e + 1.0) < pe && value < best) break;
    }
    C *= best;
  }
  return C * (1.0 + 1e-9);
}

}  // namespace

namespace detail {

std::vector<bool> squarefree_sieve(std::size_t N) {
  std::vector<bool> sf(N + 1, true);
  sf[0] = false;
  for (std::size_t i = 2; i * i <= N; ++i) {
    for (std::size_t m = i * i; m <= N; m += i * i) sf[m] = false;
  }
  return sf;
}

}  // namespace detail

GeneratorSpec GeneratorSpec::power(Rational alpha) {
  GeneratorSpec s;
  s.kind = Kind::power;
  s.alpha = std::move(alpha);
  return s;
}

GeneratorSpec GeneratorSpec::divisor(unsigned k) {
  GeneratorSpec s;
  s.kind = Kind::divisor;
  s.k = k;
  return s;
}

GeneratorSpec GeneratorSpec::one_plus_q(std::uint64_t q, Rational c) {
  GeneratorSpec s;
  s.kind = Kind::one_plus_q;
  s.q = q;
  s.c = std::move(c);
  return s;
}

GeneratorSpec GeneratorSpec::abs_moebius() {
  GeneratorSpec s;
  s.kind = Kind::abs_moebius;
  return s;
}

GeneratorSpec GeneratorSpec::euler_zagier_star() {
  GeneratorSpec s;
  s.kind = Kind::euler_zagier_star;
  return s;
}

GeneratorSpec parse_generator(std::string_view text) {
  auto parts = split(text, ':');
  const auto head = parts[0];
  auto expect_args = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
      throw Error(ErrorKind::invalid_argument,
                  "generator: wrong number of arguments in '" + std::string(text) + "'");
    }
  };
  GeneratorSpec spec;
  if (head == "ones") {
    expect_args(0, 0);
  } else if (head == "pow") {
    expect_args(1, 1);
    spec = GeneratorSpec::power(parse_rational(parts[1]));
  } else if (head == "dk") {
    expect_args(1, 1);
    spec = GeneratorSpec::divisor(static_cast<unsigned>(parse_unsigned(parts[1], "k")));
  } else if (head == "oneplusq") {
    expect_args(1, 2);
    Rational c = parts.size() == 3 ? parse_rational(parts[2]) : Rational(1);
    spec = GeneratorSpec::one_plus_q(parse_unsigned(parts[1], "q"), c);
  } else if (head == "absmu") {
    expect_args(0, 0);
    spec = GeneratorSpec::abs_moebius();
  } else if (head == "ezstar") {
    expect_args(0, 0);
    spec = GeneratorSpec::euler_zagier_star();
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown generator '" + std::string(text) + "'");
  }
  validate(spec);
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::ones: return "ones";
    case Kind::power: return "pow:" + to_string(spec.alpha);
    case Kind::divisor: return "dk:" + std::to_string(spec.k);
    case Kind::one_plus_q:
      return "oneplusq:" + std::to_string(spec.q) + (spec.c == 1 ? "" : ":" + to_string(spec.c));
    case Kind::abs_moebius: return "absmu";
    case Kind::euler_zagier_star: return "ezstar";
  }
  return "?";
}

void validate(const GeneratorSpec& spec) {
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::power:
      if (spec.alpha > 0) {
        throw Error(ErrorKind::invalid_argument, "pow: alpha must be <= 0");
      }
      if (spec.alpha.get_den() != 1) {
        throw Error(ErrorKind::unsupported_exactness,
                    "pow: non-integer alpha gives irrational coefficients");
      }
      break;
    case Kind::divisor:
      if (spec.k < 2) throw Error(ErrorKind::invalid_argument, "dk: k must be >= 2");
      break;
    case Kind::one_plus_q:
      if (spec.q < 2) throw Error(ErrorKind::invalid_argument, "oneplusq: q must be >= 2");
      if (spec.c <= 0) throw Error(ErrorKind::invalid_argument, "oneplusq: c must be > 0");
      break;
    default:
      break;
  }
}

GrowthCertificate growth_certificate(const GeneratorSpec& spec) {
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::divisor:
      return {divisor_growth_constant(spec.k, kDivisorEps), kDivisorEps, std::nullopt};
    case Kind::one_plus_q:
      return {std::max(1.0, to_double(spec.c)), 0.0, spec.q};
    default:
      return {1.0, 0.0, std::nullopt};
  }
}

std::vector<GeneratorSpec> standard_generators() {
  return {
      GeneratorSpec::ones(),
      GeneratorSpec::power(Rational(-1)),
      GeneratorSpec::divisor(2),
      GeneratorSpec::divisor(3),
      GeneratorSpec::divisor(4),
      GeneratorSpec::one_plus_q(2),
      GeneratorSpec::one_plus_q(2, 4),
      GeneratorSpec::abs_moebius(),
      GeneratorSpec::euler_zagier_star(),
  };
}

}  // namespace zetadist
