#pragma once

/**
 * @file asymptotic.hpp
 * @brief Per-dimension exponents of the alphabet construction.
 *
 * With l_j ~ l0_j n the bound behaves like (L0 / M0)^n where ln L0 = H(l0)
 * and ln M0 is the largest entropy of an exponent histogram s whose mean
 * exponent stays below rho = lim p / n. The inner problem is concave with a
 * single linear constraint, so its maximiser is a Gibbs distribution
 * s_e ~ exp(-lambda e) with lambda found by bisection.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "fw_bound.hpp"
#include "general_bound.hpp"

namespace spherechi {

struct AsymptoticSpec {
  std::vector<std::int64_t> b;
  std::vector<double> l0;  // limiting fractions, positive, sum 1

  [[nodiscard]] std::size_t t() const { return b.size(); }

  void validate() const {
    if (b.size() < 2) throw Error("asymptotic spec needs t >= 2");
    if (b.size() != l0.size()) throw Error("asymptotic spec: b and l0 have different lengths");
    double total = 0.0;
    for (double x : l0) {
      if (!(x > 0.0 && x < 1.0)) throw Error("asymptotic spec: fractions must lie in (0, 1)");
      total += x;
    }
    if (std::abs(total - 1.0) > 1e-12) throw Error("asymptotic spec: fractions must sum to 1");
    std::vector<std::int64_t> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("asymptotic spec: coordinate values must be distinct");
    }
  }
};

struct EntropyOptimum {
  double M0 = 0.0;
  double log_M0 = 0.0;
  std::vector<double> s0_star;  // slot order s_1..s_t; slot i < t has exponent i, slot t exponent 0
  double lambda = 0.0;
};

struct ExponentResult {
  double L0 = 0.0;
  double M0 = 0.0;
  double rho = 0.0;
  std::vector<double> s0_star;
  double exponent = 0.0;  // ln L0 - ln M0
  double lambda = 0.0;
};

inline double entropy(std::span<const double> s) {
  double h = 0.0;
  for (double x : s) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

/// Constraint weight of histogram slot i (0-based): i + 1 for i < t - 1, zero for the last slot.
inline double slot_weight(std::size_t slot, std::size_t t) {
  return slot + 1 < t ? static_cast<double>(slot + 1) : 0.0;
}

/// In the limit the multiplicities can always be rounded so that s_max is a
/// multiple of the transposition gcd, making d equal to that gcd.
inline double rho_of(const AsymptoticSpec& spec, double r) {
  spec.validate();
  const std::uint64_t d = swap_delta_gcd(spec.b);
  if (d == 0) throw Error("degenerate modulus");
  double s_max = 0.0;
  for (std::size_t j = 0; j < spec.t(); ++j) {
    s_max += spec.l0[j] * static_cast<double>(spec.b[j] * spec.b[j]);
  }
  return s_max / (2.0 * r * r * static_cast<double>(d));
}

namespace detail {

// Gibbs histogram over exponents 0..t-1 at inverse temperature lambda;
// returns (mean exponent, log partition function), fills probs in exponent order.
inline std::pair<double, double> gibbs(std::size_t t, double lambda, std::vector<double>& probs) {
  probs.assign(t, 0.0);
  double z = 0.0;
  for (std::size_t e = 0; e < t; ++e) {
    probs[e] = std::exp(-lambda * static_cast<double>(e));
    z += probs[e];
  }
  double mean = 0.0;
  for (std::size_t e = 0; e < t; ++e) {
    probs[e] /= z;
    mean += static_cast<double>(e) * probs[e];
  }
  return {mean, std::log(z)};
}

}  // namespace detail

inline EntropyOptimum max_entropy_M0(std::size_t t, double rho) {
  if (t < 2) throw Error("max_entropy_M0: t must be at least 2");
  if (!(rho > 0.0)) throw Error("empty feasible interior");
  EntropyOptimum out;
  std::vector<double> by_exponent;
  double lambda = 0.0;
  const double uniform_mean = static_cast<double>(t - 1) / 2.0;
  if (rho < uniform_mean) {
    double lo = 0.0;
    double hi = 100.0;
    while (detail::gibbs(t, hi, by_exponent).first > rho) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e6) throw Error("max_entropy_M0: rho too small to resolve");
    }
    for (int iter = 0; iter < 80; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (detail::gibbs(t, mid, by_exponent).first > rho) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    lambda = 0.5 * (lo + hi);
  }
  detail::gibbs(t, lambda, by_exponent);
  out.lambda = lambda;
  out.s0_star.resize(t);
  for (std::size_t slot = 0; slot + 1 < t; ++slot) out.s0_star[slot] = by_exponent[slot + 1];
  out.s0_star[t - 1] = by_exponent[0];
  out.log_M0 = entropy(out.s0_star);
  out.M0 = std::exp(out.log_M0);
  return out;
}

inline ExponentResult exponent_bound(const AsymptoticSpec& spec, double r) {
  require_radius_above_half(r);
  ExponentResult out;
  out.rho = rho_of(spec, r);
  const EntropyOptimum inner = max_entropy_M0(spec.t(), out.rho);
  const double log_L0 = entropy(spec.l0);
  out.L0 = std::exp(log_L0);
  out.M0 = inner.M0;
  out.s0_star = inner.s0_star;
  out.lambda = inner.lambda;
  out.exponent = log_L0 - inner.log_M0;
  return out;
}

struct SearchConfig {
  std::size_t t_max = 4;
  std::int64_t b_max = 3;
  std::size_t starts = 8;
  std::uint64_t seed = 1;
  std::int64_t validation_n = 1'000'000;
};

struct CandidateResult {
  AsymptoticSpec spec;
  ExponentResult result;
  bool validated = false;  // finite-n construction at validation_n satisfies every condition
};

struct OptimizationResult {
  CandidateResult best;
  CandidateResult baseline;
  std::size_t alphabets_examined = 0;
  std::size_t alphabets_rejected = 0;
};

/// Round l0 to a finite construction with m <= n - 1 and every multiplicity a
/// multiple of the transposition gcd, then re-check the construction's
/// conditions there.
inline bool validate_at_finite_n(const AsymptoticSpec& spec, double r, std::int64_t n) {
  const std::uint64_t g = swap_delta_gcd(spec.b);
  if (g == 0) return false;
  const auto units = static_cast<std::uint64_t>((n - 1)) / g;
  std::vector<std::uint64_t> l(spec.t());
  std::uint64_t used = 0;
  for (std::size_t j = 0; j < spec.t(); ++j) {
    l[j] = static_cast<std::uint64_t>(std::floor(spec.l0[j] * static_cast<double>(units)));
    if (l[j] == 0) return false;
    used += l[j];
  }
  // Hand leftover units to the largest fraction.
  const auto largest = static_cast<std::size_t>(
      std::max_element(spec.l0.begin(), spec.l0.end()) - spec.l0.begin());
  l[largest] += units - used;
  for (auto& x : l) x *= g;
  try {
    const ConstructionSpec finite = ConstructionSpec::make(spec.b, l);
    return derive_parameters(finite, r).valid == GeneralStatus::Ok;
  } catch (const Error&) {
    return false;
  }
}

namespace detail {

// Canonical alphabets of size t from [-b_max, b_max]: ascending, entries
// without a common factor (scaled copies share rho), and not larger than the
// negated reversed alphabet (b -> -b keeps every inner product).
inline std::vector<std::vector<std::int64_t>> canonical_alphabets(std::size_t t, std::int64_t b_max) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> pool;
  for (std::int64_t v = -b_max; v <= b_max; ++v) pool.push_back(v);
  if (t > pool.size()) return out;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(t), true);
  do {
    std::vector<std::int64_t> alpha;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) alpha.push_back(pool[i]);
    }
    std::int64_t content = 0;
    for (std::int64_t v : alpha) content = std::gcd(content, v);
    if (content > 1) continue;
    std::vector<std::int64_t> mirrored;
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) mirrored.push_back(-*it);
    if (mirrored < alpha) continue;
    out.push_back(std::move(alpha));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline double exponent_or_minus_inf(const AsymptoticSpec& spec, double r) {
  try {
    return exponent_bound(spec, r).exponent;
  } catch (const Error&) {
    return -std::numeric_limits<double>::infinity();
  }
}

// Pairwise mass-transfer pattern search on the open simplex.
inline std::vector<double> local_search(const std::vector<std::int64_t>& b, std::vector<double> l0,
                                        double r) {
  constexpr double kFloor = 1e-6;
  AsymptoticSpec spec{b, l0};
  double best = exponent_or_minus_inf(spec, r);
  double step = 0.1;
  while (step > 1e-10) {
    bool improved = false;
    for (std::size_t i = 0; i < l0.size(); ++i) {
      for (std::size_t j = 0; j < l0.size(); ++j) {
        if (i == j) continue;
        const double move = std::min(step, l0[j] - kFloor);
        if (move <= 0.0) continue;
        std::vector<double> trial = l0;
        trial[i] += move;
        trial[j] -= move;
        spec.l0 = trial;
        const double value = exponent_or_minus_inf(spec, r);
        if (value > best + 1e-15) {
          best = value;
          l0 = std::move(trial);
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return l0;
}

inline bool better(const CandidateResult& x, const CandidateResult& y) {
  if (x.result.exponent != y.result.exponent) return x.result.exponent > y.result.exponent;
  return std::tie(x.spec.b, x.spec.l0) < std::tie(y.spec.b, y.spec.l0);
}

}  // namespace detail

/// Best-effort search over integer alphabets and limiting fractions. The
/// balanced +-1 construction is always a candidate, so the result is never
/// below it. Deterministic for a fixed seed.
inline OptimizationResult optimize_gamma(double r, const SearchConfig& search = {}) {
  require_radius_above_half(r);
  OptimizationResult out;
  out.baseline.spec = {{-1, 1}, {0.5, 0.5}};
  out.baseline.result = exponent_bound(out.baseline.spec, r);
  out.baseline.validated = validate_at_finite_n(out.baseline.spec, r, search.validation_n);
  out.best = out.baseline;

  std::mt19937_64 rng(search.seed);
  for (std::size_t t = 2; t <= search.t_max; ++t) {
    for (const auto& alphabet : detail::canonical_alphabets(t, search.b_max)) {
      ++out.alphabets_examined;
      CandidateResult best_here;
      best_here.result.exponent = -std::numeric_limits<double>::infinity();
      for (std::size_t start = 0; start < std::max<std::size_t>(search.starts, 1); ++start) {
        std::vector<double> l0(t, 1.0 / static_cast<double>(t));
        if (start > 0) {
          std::gamma_distribution<double> draw(1.0, 1.0);
          double total = 0.0;
          for (double& x : l0) {
            x = draw(rng) + 1e-3;
            total += x;
          }
          for (double& x : l0) x /= total;
        }
        CandidateResult candidate;
        candidate.spec = {alphabet, detail::local_search(alphabet, l0, r)};
        const double total = std::accumulate(candidate.spec.l0.begin(), candidate.spec.l0.end(), 0.0);
        for (double& x : candidate.spec.l0) x /= total;
        try {
          candidate.result = exponent_bound(candidate.spec, r);
        } catch (const Error&) {
          continue;
        }
        if (detail::better(candidate, best_here)) best_here = std::move(candidate);
      }
      if (!std::isfinite(best_here.result.exponent)) {
        ++out.alphabets_rejected;
        continue;
      }
      best_here.validated = validate_at_finite_n(best_here.spec, r, search.validation_n);
      if (!best_here.validated) {
        ++out.alphabets_rejected;
        continue;
      }
      if (detail::better(best_here, out.best)) out.best = std::move(best_here);
    }
  }
  return out;
}

}  // namespace spherechi
