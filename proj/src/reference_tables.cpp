#include "zetadist/reference_tables.hpp"

#include <functional>
#include <optional>

#include "zetadist/dirichlet.hpp"
#include "zetadist/generators.hpp"
#include "zetadist/log_linear.hpp"
#include "zetadist/primes.hpp"

namespace zetadist {

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::flagged: return "flagged";
  }
  return "mismatch";
}

std::size_t ReferenceReport::count(RowStatus status) const {
  std::size_t k = 0;
  for (const auto& r : rows) k += r.status == status;
  return k;
}

namespace {

// Stated A(n)/log n for n = p^r, given (p, r).
using Pattern = std::function<Rational(std::uint64_t p, unsigned r)>;

Rational alternating(unsigned r) { return make_rational(r % 2 == 1 ? 1 : -1, r); }

// r with n = q^r, if any.
std::optional<unsigned> power_of(std::uint64_t n, std::uint64_t q) {
  unsigned r = 0;
  while (n % q == 0) {
    n /= q;
    ++r;
  }
  if (n != 1 || r == 0) return std::nullopt;
  return r;
}

void add_family(std::vector<ReferenceRow>& rows, const GeneratorSpec& spec, std::size_t max_n,
                const std::function<std::optional<Rational>(std::uint64_t)>& stated) {
  const auto A = compute_A(generate<Rational>(spec, max_n));
  const std::string family = to_string(spec);
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    const Rational want = stated(n).value_or(Rational(0));
    ReferenceRow row{family, "A(n)/log n", n, to_string(want), {}, RowStatus::match, {}};
    if (auto got = A(n).ratio_to_log(n)) {
      row.computed = to_string(*got);
      if (*got != want) row.status = RowStatus::mismatch;
    } else {
      row.computed = "(" + A(n).to_string() + ")/log(" + std::to_string(n) + ")";
      row.status = RowStatus::mismatch;
    }
    rows.push_back(std::move(row));
  }
}

std::function<std::optional<Rational>(std::uint64_t)> prime_power_pattern(Pattern f) {
  return [f = std::move(f)](std::uint64_t n) -> std::optional<Rational> {
    if (auto pp = as_prime_power(n)) return f(pp->prime, pp->exponent);
    return std::nullopt;
  };
}

LogLinear times_log(const Rational& r, std::uint64_t n) { return LogLinear::log_of(n) * r; }

std::string stated_text(const Rational& r, std::uint64_t n) {
  if (r == 1) return "log(" + std::to_string(n) + ")";
  return to_string(r) + "*log(" + std::to_string(n) + ")";
}

}  // namespace

std::vector<ReferenceRow> ezstar_rows() {
  const auto a = generate<Rational>(GeneratorSpec::euler_zagier_star(), 12);
  const auto inv = dirichlet_inverse(a);
  const auto A = compute_A(a);
  std::vector<ReferenceRow> rows;

  const std::pair<std::uint64_t, Rational> inverse_stated[] = {
      {2, make_rational(-1, 2)}, {3, make_rational(-1, 2)}, {4, make_rational(-3, 4)},
      {5, make_rational(-1, 2)}, {6, make_rational(0)},     {7, make_rational(-1, 2)},
  };
  for (const auto& [n, want] : inverse_stated) {
    const Rational& got = inv(n);
    rows.push_back({"ezstar", "a^-1(n)", n, to_string(want), to_string(got),
                    got == want ? RowStatus::match : RowStatus::mismatch, {}});
  }

  const std::pair<std::uint64_t, Rational> A_stated[] = {
      {2, make_rational(1)},     {3, make_rational(1)},      {4, make_rational(7, 8)},
      {5, make_rational(1)},     {6, make_rational(1, 4)},   {7, make_rational(1)},
      {8, make_rational(1, 8)},  {12, make_rational(-1, 8)},
  };
  for (const auto& [n, r] : A_stated) {
    const LogLinear& got = A(n);
    ReferenceRow row{"ezstar", "A(n)", n, stated_text(r, n), got.to_string(), RowStatus::match,
                     {}};
    if (got != times_log(r, n)) row.status = RowStatus::mismatch;
    if (n == 8 && row.status == RowStatus::mismatch && got == times_log(make_rational(1, 8), 2)) {
      // The worked derivation of the same value ends in (1/8) log 2.
      row.status = RowStatus::flagged;
      row.note = "stated list gives 1/8*log(8), stated derivation gives 1/8*log(2); "
                 "exact recursion agrees with the derivation";
    } else if (row.status == RowStatus::mismatch && is_prime(n)) {
      row.note = "a(n) = 1/2 at primes, so A(n) = a#(n) a^-1(1) = 1/2*log(n)";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ReferenceReport reference_tables(std::size_t max_n) {
  if (max_n < 2) throw Error(ErrorKind::invalid_length, "reference tables need max_n >= 2");
  ReferenceReport report;
  report.max_n = max_n;
  auto& rows = report.rows;

  add_family(rows, GeneratorSpec::ones(), max_n,
             prime_power_pattern([](std::uint64_t, unsigned r) { return make_rational(1, r); }));
  for (long alpha : {-1L, -2L}) {
    add_family(rows, GeneratorSpec::power(alpha), max_n,
               prime_power_pattern([alpha](std::uint64_t p, unsigned r) {
                 Rational v = rational_power(p, alpha * static_cast<long>(r));
                 return Rational(v / r);
               }));
  }
  for (unsigned k : {2u, 3u, 4u}) {
    add_family(rows, GeneratorSpec::divisor(k), max_n,
               prime_power_pattern([k](std::uint64_t, unsigned r) {
                 return make_rational(static_cast<long>(k), r);
               }));
  }
  for (std::uint64_t q : {2u, 3u}) {
    add_family(rows, GeneratorSpec::one_plus_q(q), max_n,
               [q](std::uint64_t n) -> std::optional<Rational> {
                 if (auto r = power_of(n, q)) return alternating(*r);
                 return std::nullopt;
               });
  }
  add_family(rows, GeneratorSpec::abs_moebius(), max_n,
             prime_power_pattern([](std::uint64_t, unsigned r) { return alternating(r); }));

  for (auto& row : ezstar_rows()) rows.push_back(std::move(row));
  return report;
}

}  // namespace zetadist
