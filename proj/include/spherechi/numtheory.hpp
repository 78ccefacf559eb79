#pragma once

/**
 * @file numtheory.hpp
 * @brief Primes, the prime-gap function f(x) and the dimension rounding m(x).
 *
 * Every bound downstream is a certificate, so primality is deterministic:
 * trial division by small primes, then Miller-Rabin with the first twelve
 * prime bases, which has no pseudoprimes below 3.3e24.
 */

#include <array>
#include <cmath>
#include <cstdint>

#include "error.hpp"

namespace spherechi::numtheory {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// One strong-probable-prime round; k - 1 = d * 2^s with d odd.
inline bool passes_witness(std::uint64_t k, std::uint64_t witness, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(witness, d, k);
  if (x == 1 || x == k - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, k);
    if (x == k - 1) return true;
  }
  return false;
}

inline constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace detail

/// Deterministic for every 64-bit input.
inline bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t q : detail::kWitnesses) {
    if (k == q) return true;
    if (k % q == 0) return false;
  }
  if (k < 41 * 41) return true;
  std::uint64_t d = k - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t w : detail::kWitnesses) {
    if (!detail::passes_witness(k, w, d, s)) return false;
  }
  return true;
}

/// Least prime strictly greater than x. Strict even when x is itself prime.
inline std::uint64_t next_prime_above(double x) {
  if (!(x >= 0.0)) throw Error("next_prime_above: x must be nonnegative");
  if (x > 9.2233720368547758e18) throw Error("next_prime_above: x exceeds 2^63");
  auto candidate = static_cast<std::uint64_t>(std::floor(x)) + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

/// f(x) = next_prime_above(x) - x together with the prime itself.
struct PrimeGapEval {
  double x = 0.0;
  std::uint64_t next_prime = 0;
  double gap_f = 0.0;
};

inline PrimeGapEval prime_gap_f(double x) {
  const std::uint64_t q = next_prime_above(x);
  return {x, q, static_cast<double>(q) - x};
}

/// m(x): the largest multiple of 4 strictly below x.
inline std::int64_t largest_multiple_of_4_below(double x) {
  if (!(x > 4.0)) throw Error("degenerate dimension: no positive multiple of 4 below x");
  auto m = static_cast<std::int64_t>(std::floor(x / 4.0)) * 4;
  if (static_cast<double>(m) >= x) m -= 4;
  return m;
}

}  // namespace spherechi::numtheory
