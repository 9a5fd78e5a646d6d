#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zetadist {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

// Trial division; primes in increasing order. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// p^r with r >= 1 when n is a prime power, nothing otherwise (including n = 1).
std::optional<PrimePower> as_prime_power(std::uint64_t n);

bool is_squarefree(std::uint64_t n);
bool is_perfect_square(std::uint64_t n);

int moebius(std::uint64_t n);

// Primes up to and including limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace zetadist
