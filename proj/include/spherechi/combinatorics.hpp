#pragma once

/**
 * @file combinatorics.hpp
 * @brief Exact binomials, multinomials, the ratio C(m, m/2) / C(m, p) and the
 * monomial count M of the reduced polynomial space.
 */

#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace spherechi {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline constexpr double kLn2 = 0.69314718055994530942;

// Floor of a / b * 2^shift held in roughly 64 significant bits, with the
// shift that was applied. a, b > 0.
inline double log_quotient(const BigInt& a, const BigInt& b) {
  const long shift = static_cast<long>(boost::multiprecision::msb(b)) -
                     static_cast<long>(boost::multiprecision::msb(a)) + 64;
  BigInt q = shift >= 0 ? BigInt(a << shift) / b : a / BigInt(b << -shift);
  return std::log(q.convert_to<double>()) - static_cast<double>(shift) * kLn2;
}

}  // namespace detail

/// Natural log of a positive big integer.
inline double log_big(const BigInt& x) {
  if (x <= 0) throw Error("log_big: argument must be positive");
  return detail::log_quotient(x, BigInt(1));
}

/// Natural log of num / den for positive num, den. Uses log1p near 1 so
/// that the relative error stays small even when the log is tiny.
inline double log_ratio(const BigInt& num, const BigInt& den) {
  if (num <= 0 || den <= 0) throw Error("log_ratio: arguments must be positive");
  const BigInt diff = num - den;
  if (diff == 0) return 0.0;
  if (num <= 2 * den && 2 * num >= den) {
    const bool negative = diff < 0;
    const BigInt mag = negative ? BigInt(-diff) : diff;
    const double frac = std::exp(detail::log_quotient(mag, den));
    return std::log1p(negative ? -frac : frac);
  }
  return detail::log_quotient(num, den);
}

/// A reduced positive rational with a log-space shadow for reporting.
struct ExactRatio {
  BigInt numerator{0};
  BigInt denominator{1};
  double log_value = 0.0;

  static ExactRatio make(BigInt num, BigInt den) {
    if (den <= 0) throw Error("ExactRatio: denominator must be positive");
    if (num <= 0) throw Error("ExactRatio: numerator must be positive");
    const BigInt g = boost::multiprecision::gcd(num, den);
    num /= g;
    den /= g;
    ExactRatio r;
    r.log_value = log_ratio(num, den);
    r.numerator = std::move(num);
    r.denominator = std::move(den);
    return r;
  }

  /// Exact test of numerator / denominator > k.
  [[nodiscard]] bool exceeds(const BigInt& k) const { return numerator > k * denominator; }

  [[nodiscard]] double value() const { return std::exp(log_value); }

  [[nodiscard]] std::string str() const {
    return numerator.str() + "/" + denominator.str();
  }

  friend bool operator<(const ExactRatio& x, const ExactRatio& y) {
    return x.numerator * y.denominator < y.numerator * x.denominator;
  }
  friend bool operator==(const ExactRatio& x, const ExactRatio& y) {
    return x.numerator == y.numerator && x.denominator == y.denominator;
  }
};

/// C(m, k), zero outside 0 <= k <= m.
inline BigInt binomial(std::uint64_t m, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > m) return 0;
  std::uint64_t kk = std::min<std::uint64_t>(static_cast<std::uint64_t>(k), m - static_cast<std::uint64_t>(k));
  BigInt result = 1;
  for (std::uint64_t i = 0; i < kk; ++i) {
    result *= (m - i);
    result /= (i + 1);
  }
  return result;
}

/// m! / (parts[0]! ... parts[t-1]!) as a product of binomials.
inline BigInt multinomial(std::uint64_t m, std::span<const std::uint64_t> parts) {
  const std::uint64_t total = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  if (total != m) throw Error("invalid composition: parts do not sum to m");
  BigInt result = 1;
  std::uint64_t remaining = m;
  for (std::uint64_t part : parts) {
    result *= binomial(remaining, static_cast<std::int64_t>(part));
    remaining -= part;
  }
  return result;
}

/// C(m, m/2) / C(m, p), reduced.
inline ExactRatio fw_ratio(std::uint64_t m, std::uint64_t p) {
  if (m % 2 != 0) throw Error("fw_ratio: m must be even");
  if (p == 0 || p > m) throw Error("fw_ratio: p must satisfy 0 < p <= m");
  return ExactRatio::make(binomial(m, static_cast<std::int64_t>(m / 2)),
                          binomial(m, static_cast<std::int64_t>(p)));
}

/// Number of monomials y_1^e_1 ... y_m^e_m with every e_i < t and total
/// degree at most p - 1: the sum of m! / (s_1! ... s_t!) over exponent
/// histograms (s_i variables with exponent i for i < t, s_t with exponent 0)
/// obeying s_1 + 2 s_2 + ... + (t-1) s_{t-1} <= p - 1.
///
/// Equivalent to the sum of the first p coefficients of (1 + x + ... + x^{t-1})^m,
/// built one variable at a time with a sliding window.
inline BigInt monomial_count_M(std::uint64_t m, std::uint64_t t, std::uint64_t p) {
  if (t < 2) throw Error("monomial_count_M: t must be at least 2");
  if (p < 1) throw Error("monomial_count_M: p must be positive");
  const std::uint64_t max_degree = std::min<std::uint64_t>(p - 1, m * (t - 1));
  std::vector<BigInt> coeff(max_degree + 1, BigInt(0));
  coeff[0] = 1;
  std::uint64_t reach = 0;  // highest degree with a nonzero coefficient so far
  std::vector<BigInt> next(max_degree + 1);
  for (std::uint64_t var = 0; var < m; ++var) {
    const std::uint64_t new_reach = std::min(max_degree, reach + t - 1);
    BigInt window = 0;
    for (std::uint64_t k = 0; k <= new_reach; ++k) {
      if (k <= reach) window += coeff[k];
      if (k >= t && k - t <= reach) window -= coeff[k - t];
      next[k] = window;
    }
    for (std::uint64_t k = 0; k <= new_reach; ++k) coeff[k] = next[k];
    reach = new_reach;
  }
  BigInt total = 0;
  for (std::uint64_t k = 0; k <= reach; ++k) total += coeff[k];
  return total;
}

/// exp((m - 2p)^2 / (2m)), the leading-order behaviour of fw_ratio(m, p).
inline double ratio_asymptotic(std::uint64_t m, std::uint64_t p) {
  if (m == 0) throw Error("ratio_asymptotic: m must be positive");
  const double gap = static_cast<double>(m) - 2.0 * static_cast<double>(p);
  return std::exp(gap * gap / (2.0 * static_cast<double>(m)));
}

}  // namespace spherechi
