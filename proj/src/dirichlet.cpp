#include "zetadist/dirichlet.hpp"

#include <cmath>

namespace zetadist {

NumericFunction to_numeric(const ExactFunction& a) {
  std::vector<double> c;
  c.reserve(a.size());
  for (const auto& x : a.coefficients()) c.push_back(to_double(x));
  return NumericFunction(std::move(c), a.name(), a.growth());
}

std::vector<LogLinear> sharp(const ExactFunction& a) {
  std::vector<LogLinear> out(a.size());
  for (std::size_t n = 2; n <= a.size(); ++n) {
    if (is_zero(a(n))) continue;
    out[n - 1] = LogLinear::log_of(n) * a(n);
  }
  return out;
}

std::vector<double> sharp(const NumericFunction& a) {
  std::vector<double> out(a.size(), 0.0);
  for (std::size_t n = 2; n <= a.size(); ++n) {
    out[n - 1] = a(n) * std::log(static_cast<double>(n));
  }
  return out;
}

namespace {

template <class Value, class Scalar>
ASequence<Value> compute_A_impl(const ArithmeticFunction<Scalar>& a) {
  auto inverse = dirichlet_inverse(a);
  auto twisted = sharp(a);
  auto full = detail::convolve<Value>(std::span<const Value>(twisted), inverse.coefficients());
  std::vector<Value> from_two(std::make_move_iterator(full.begin() + 1),
                              std::make_move_iterator(full.end()));
  return ASequence<Value>(std::move(from_two), a.name());
}

}  // namespace

ASequence<LogLinear> compute_A(const ExactFunction& a) {
  return compute_A_impl<LogLinear>(a);
}

ASequence<double> compute_A(const NumericFunction& a) {
  return compute_A_impl<double>(a);
}

ASequence<double> to_numeric(const ASequence<LogLinear>& A) {
  std::vector<double> v;
  v.reserve(A.values().size());
  for (const auto& x : A.values()) v.push_back(x.to_double());
  return ASequence<double>(std::move(v), A.source());
}

std::optional<std::size_t> first_negative(const ASequence<LogLinear>& A) {
  for (std::size_t n = 2; n <= A.size(); ++n) {
    if (sign_of(A(n)) == Sign::negative) return n;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_negative(const ASequence<double>& A) {
  for (std::size_t n = 2; n <= A.size(); ++n) {
    if (A(n) < 0.0) return n;
  }
  return std::nullopt;
}

}  // namespace zetadist
