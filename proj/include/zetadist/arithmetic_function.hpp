#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zetadist/error.hpp"
#include "zetadist/rational.hpp"

namespace zetadist {

// Certifies |a(n)| <= C * n^eps for every n >= 1. When support_end is set,
// a(n) = 0 for all n > support_end as well.
struct GrowthCertificate {
  double C = 1.0;
  double eps = 0.0;
  std::optional<std::uint64_t> support_end;

  bool operator==(const GrowthCertificate&) const = default;
};

// Coefficients a(1), ..., a(N) of a truncated Dirichlet series.
//
// Scalar is Rational for the exact lane and double for the numeric lane.
// Indexing is 1-based as in number theory: f(1) is the first coefficient.
template <class Scalar>
class ArithmeticFunction {
 public:
  using scalar_type = Scalar;

  ArithmeticFunction() = default;

  explicit ArithmeticFunction(std::vector<Scalar> coeffs, std::string name = {},
                              std::optional<GrowthCertificate> growth = std::nullopt)
      : coeffs_(std::move(coeffs)), name_(std::move(name)), growth_(std::move(growth)) {
    if (coeffs_.empty()) {
      throw Error(ErrorKind::invalid_length, "arithmetic function needs length N >= 1");
    }
  }

  std::size_t size() const noexcept { return coeffs_.size(); }

  const Scalar& operator()(std::size_t n) const { return coeffs_[n - 1]; }

  std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

  const std::string& name() const noexcept { return name_; }
  const std::optional<GrowthCertificate>& growth() const noexcept { return growth_; }

  ArithmeticFunction with_name(std::string name) const {
    ArithmeticFunction out = *this;
    out.name_ = std::move(name);
    return out;
  }

  ArithmeticFunction with_growth(std::optional<GrowthCertificate> growth) const {
    ArithmeticFunction out = *this;
    out.growth_ = std::move(growth);
    return out;
  }

  // First N coefficients; the certificate still holds for the prefix.
  ArithmeticFunction truncated(std::size_t N) const {
    if (N == 0 || N > size()) {
      throw Error(ErrorKind::invalid_length, "truncation length out of range");
    }
    return ArithmeticFunction(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + N), name_,
                              growth_);
  }

  bool operator==(const ArithmeticFunction& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
  std::string name_;
  std::optional<GrowthCertificate> growth_;
};

using ExactFunction = ArithmeticFunction<Rational>;
using NumericFunction = ArithmeticFunction<double>;

NumericFunction to_numeric(const ExactFunction& a);

// a(1) > 0 and a(n) >= 0 for every stored n.
template <class Scalar>
bool satisfies_assumption_a(const ArithmeticFunction<Scalar>& a) {
  if (!(a(1) > 0)) return false;
  for (const auto& c : a.coefficients()) {
    if (c < 0) return false;
  }
  return true;
}

// Least n with a(n) < 0, if any.
template <class Scalar>
std::optional<std::uint64_t> first_negative(const ArithmeticFunction<Scalar>& a) {
  for (std::size_t n = 1; n <= a.size(); ++n) {
    if (a(n) < 0) return n;
  }
  return std::nullopt;
}

}  // namespace zetadist
