#pragma once

// Slow but obvious reference implementations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

inline bool trial_division_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t q = 2; q * q <= k; ++q) {
    if (k % q == 0) return false;
  }
  return true;
}

inline std::vector<bool> sieve(std::size_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= limit; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= limit; j += i) prime[j] = false;
  }
  return prime;
}

inline Big factorial(std::uint64_t n) {
  Big f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Big binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  return factorial(m) / (factorial(k) * factorial(m - k));
}

// Number of exponent vectors in {0..t-1}^m with sum <= p - 1, by enumeration.
inline Big monomials_by_enumeration(std::size_t m, std::size_t t, std::size_t p) {
  std::vector<std::size_t> e(m, 0);
  Big count = 0;
  while (true) {
    const std::size_t sum = std::accumulate(e.begin(), e.end(), std::size_t{0});
    if (sum + 1 <= p) ++count;
    std::size_t i = 0;
    while (i < m && ++e[i] == t) e[i++] = 0;
    if (i == m) break;
  }
  return count;
}

// Every vector over b of length m with the prescribed counts, by filtering b^m.
inline std::vector<std::vector<std::int64_t>> enumerate_vectors(const std::vector<std::int64_t>& b,
                                                                const std::vector<std::uint64_t>& l) {
  const std::size_t m = std::accumulate(l.begin(), l.end(), std::size_t{0});
  std::vector<std::size_t> idx(m, 0);
  std::vector<std::vector<std::int64_t>> out;
  while (true) {
    std::vector<std::uint64_t> counts(b.size(), 0);
    for (std::size_t i : idx) ++counts[i];
    if (counts == l) {
      std::vector<std::int64_t> v(m);
      for (std::size_t i = 0; i < m; ++i) v[i] = b[idx[i]];
      out.push_back(std::move(v));
    }
    std::size_t i = 0;
    while (i < m && ++idx[i] == b.size()) idx[i++] = 0;
    if (i == m) break;
  }
  return out;
}

inline std::int64_t dot(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Inner product -> number of ordered pairs.
inline std::map<std::int64_t, std::uint64_t> census(const std::vector<std::vector<std::int64_t>>& vs) {
  std::map<std::int64_t, std::uint64_t> out;
  for (const auto& x : vs) {
    for (const auto& y : vs) ++out[dot(x, y)];
  }
  return out;
}

inline std::uint64_t census_gcd(const std::map<std::int64_t, std::uint64_t>& c) {
  std::uint64_t g = 0;
  for (const auto& [v, n] : c) g = std::gcd(g, static_cast<std::uint64_t>(v < 0 ? -v : v));
  return g;
}

// Independence number by plain include/exclude branching on a maximum-degree
// vertex; adjacency as 128-bit masks, so at most 128 vertices.
class SimpleMis {
 public:
  using Mask = unsigned __int128;

  explicit SimpleMis(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  std::size_t solve() {
    Mask all = 0;
    for (std::size_t i = 0; i < adj_.size(); ++i) all |= Mask{1} << i;
    return go(all);
  }

 private:
  static int popcount(Mask m) {
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
           __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
  }

  std::size_t go(Mask live) {
    if (live == 0) return 0;
    int best_deg = -1;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      if (!((live >> i) & 1)) continue;
      const int deg = popcount(adj_[i] & live);
      if (deg <= 1) {
        // A vertex of degree <= 1 belongs to some maximum independent set.
        return 1 + go(live & ~(adj_[i] | (Mask{1} << i)));
      }
      if (deg > best_deg) {
        best_deg = deg;
        pick = i;
      }
    }
    const Mask bit = Mask{1} << pick;
    const std::size_t without = go(live & ~bit);
    const std::size_t with = 1 + go(live & ~(adj_[pick] | bit));
    return std::max(without, with);
  }

  std::vector<Mask> adj_;
};

// max H(s) over a grid of the probability simplex in R^3 subject to
// s_1 + 2 s_2 <= rho (s_3 carries weight zero).
inline double grid_max_entropy_t3(double rho, double step) {
  const auto steps = static_cast<int>(std::lround(1.0 / step));
  double best = -1.0;
  auto h = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      const double s1 = i * step;
      const double s2 = j * step;
      if (s1 + 2.0 * s2 > rho + 1e-12) break;
      const double s3 = 1.0 - s1 - s2;
      best = std::max(best, h(s1) + h(s2) + h(std::max(s3, 0.0)));
    }
  }
  return best;
}

inline double grid_max_entropy_t2(double rho, double step) {
  const auto steps = static_cast<int>(std::lround(1.0 / step));
  double best = -1.0;
  for (int i = 0; i <= steps; ++i) {
    const double s1 = i * step;
    if (s1 > rho + 1e-12) break;
    const double s2 = 1.0 - s1;
    double h = 0.0;
    if (s1 > 0.0) h -= s1 * std::log(s1);
    if (s2 > 0.0) h -= s2 * std::log(s2);
    best = std::max(best, h);
  }
  return best;
}

}  // namespace oracle
