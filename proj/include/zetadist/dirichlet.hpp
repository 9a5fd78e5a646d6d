#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zetadist/arithmetic_function.hpp"
#include "zetadist/log_linear.hpp"

namespace zetadist {

namespace detail {

template <class Acc, class L, class R>
void accumulate_product(Acc& acc, const L& x, const R& y) {
  acc += x * y;
}

inline void accumulate_product(LogLinear& acc, const LogLinear& x, const Rational& y) {
  acc.add_scaled(x, y);
}

// out(n) = sum_{ij = n} a(i) b(j) for n <= min(|a|, |b|). Runs over pairs
// (i, j) instead of divisors of n, which is O(N log N) and skips zero terms.
template <class Out, class L, class R>
std::vector<Out> convolve(std::span<const L> a, std::span<const R> b) {
  const std::size_t N = std::min(a.size(), b.size());
  std::vector<Out> out(N);
  for (std::size_t i = 1; i <= N; ++i) {
    const L& x = a[i - 1];
    if (is_zero(x)) continue;
    for (std::size_t j = 1; i * j <= N; ++j) {
      const R& y = b[j - 1];
      if (is_zero(y)) continue;
      accumulate_product(out[i * j - 1], x, y);
    }
  }
  return out;
}

}  // namespace detail

// I(1) = 1, I(n) = 0 otherwise.
template <class Scalar>
ArithmeticFunction<Scalar> identity_function(std::size_t N) {
  if (N == 0) throw Error(ErrorKind::invalid_length, "identity_function: N must be >= 1");
  std::vector<Scalar> c(N, Scalar(0));
  c[0] = Scalar(1);
  return ArithmeticFunction<Scalar>(std::move(c), "I",
                                    GrowthCertificate{1.0, 0.0, std::uint64_t{1}});
}

// (a * b)(n) = sum_{d | n} a(d) b(n/d), truncated to the shorter input.
template <class Scalar>
ArithmeticFunction<Scalar> dirichlet_convolve(const ArithmeticFunction<Scalar>& a,
                                              const ArithmeticFunction<Scalar>& b) {
  auto c = detail::convolve<Scalar>(a.coefficients(), b.coefficients());
  return ArithmeticFunction<Scalar>(std::move(c), "(" + a.name() + ")*(" + b.name() + ")");
}

// Dirichlet inverse by the divisor recursion
//   a^-1(1) = 1/a(1),  a^-1(n) = -1/a(1) * sum_{d | n, d < n} a^-1(d) a(n/d).
// The sum for n is accumulated while sweeping d upward, so a^-1(d) is final
// by the time it is pushed to its multiples.
template <class Scalar>
ArithmeticFunction<Scalar> dirichlet_inverse(const ArithmeticFunction<Scalar>& a) {
  if (is_zero(a(1))) {
    throw Error(ErrorKind::non_invertible, "dirichlet_inverse: a(1) = 0 has no Dirichlet inverse");
  }
  const std::size_t N = a.size();
  const Scalar inv_a1 = Scalar(1) / a(1);
  const Scalar neg_inv_a1 = -inv_a1;
  std::vector<Scalar> inv(N, Scalar(0));
  for (std::size_t d = 1; d <= N; ++d) {
    Scalar& v = inv[d - 1];
    if (d == 1) {
      v = inv_a1;
    } else {
      v *= neg_inv_a1;
    }
    if (is_zero(v)) continue;
    for (std::size_t m = 2 * d, q = 2; m <= N; m += d, ++q) {
      const Scalar& aq = a(q);
      if (!is_zero(aq)) detail::accumulate_product(inv[m - 1], v, aq);
    }
  }
  return ArithmeticFunction<Scalar>(std::move(inv), "inverse(" + a.name() + ")");
}

// a#(n) = a(n) log n, indexed from n = 1 (a#(1) = 0).
std::vector<LogLinear> sharp(const ExactFunction& a);
std::vector<double> sharp(const NumericFunction& a);

// A(n) = (a# * a^-1)(n) for 2 <= n <= N. A(1) is identically zero and is not
// stored; operator()(1) still answers zero.
template <class Value>
class ASequence {
 public:
  using value_type = Value;

  ASequence() = default;
  ASequence(std::vector<Value> from_two, std::string source)
      : values_(std::move(from_two)), source_(std::move(source)) {}

  // Truncation length N (largest n covered).
  std::size_t size() const noexcept { return values_.size() + 1; }

  const Value& operator()(std::size_t n) const {
    static const Value zero{};
    return n < 2 ? zero : values_[n - 2];
  }

  // Values for n = 2, ..., N.
  std::span<const Value> values() const noexcept { return values_; }

  const std::string& source() const noexcept { return source_; }

  bool operator==(const ASequence& other) const { return values_ == other.values_; }

 private:
  std::vector<Value> values_;
  std::string source_;
};

ASequence<LogLinear> compute_A(const ExactFunction& a);
ASequence<double> compute_A(const NumericFunction& a);

ASequence<double> to_numeric(const ASequence<LogLinear>& A);

// Least n with A(n) < 0: certified sign for the exact lane, plain comparison
// for the numeric lane.
std::optional<std::size_t> first_negative(const ASequence<LogLinear>& A);
std::optional<std::size_t> first_negative(const ASequence<double>& A);

}  // namespace zetadist
