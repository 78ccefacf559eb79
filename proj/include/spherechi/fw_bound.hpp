#pragma once

/**
 * @file fw_bound.hpp
 * @brief Lower bounds for chi(S_r^{n-1}) from balanced +-1 vectors.
 *
 * For dimension n and radius r the pipeline picks m (largest multiple of 4
 * below n), the prime p just above m / (8 r^2) and the forbidden inner
 * product a = m - 4p. Points of {-1, +1}^m with coordinate sum zero, scaled
 * by 1 / sqrt(2m - 2a), sit on a sphere of radius below r, and an independent
 * set of the unit-distance graph has at most C(m, p) points. Hence
 * chi >= C(m, m/2) / C(m, p).
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "numtheory.hpp"

namespace spherechi {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
// Radii are user-supplied doubles; this absorbs the rounding of 1/sqrt(2).
inline constexpr double kRadiusSlack = 1e-12;

/// Display-only reference bases of exponential lower bounds.
struct ReferenceConstants {
  double zeta1 = (1.0 + 1.41421356237309504880) / 2.0;  // chi(R^n), Euclidean
  double zeta2 = 1.239;                                  // chi(R^n), best known
  double zeta3 = 1.139753528477389;                      // gamma(1/sqrt(2))
};

/// A bound value shared by every construction.
struct BoundReport {
  std::int64_t dimension = 0;  // n of S_r^{n-1}
  ExactRatio lower_bound;
  bool exceeds_lovasz = false;  // lower_bound > n + 1, compared exactly
  std::optional<double> gamma_at_r;
  ReferenceConstants reference_constants;
  std::vector<std::string> warnings;
};

enum class FWStatus {
  Ok,
  PrimeTooLarge,        // p > m/2: the graph has no edges worth counting
  PrimeTooSmall,        // p <= m/4: the congruence argument breaks (r >= 1/sqrt(2))
  PrimeDividesModulus,  // p = 2 divides 4: every inner product is == m mod p
  Degenerate,           // n <= 4
};

inline std::string_view to_string(FWStatus s) {
  switch (s) {
    case FWStatus::Ok: return "OK";
    case FWStatus::PrimeTooLarge: return "PrimeTooLarge";
    case FWStatus::PrimeTooSmall: return "PrimeTooSmall";
    case FWStatus::PrimeDividesModulus: return "PrimeDividesModulus";
    case FWStatus::Degenerate: return "Degenerate";
  }
  return "?";
}

struct FWInstance {
  std::int64_t n = 0;
  double r = 0.0;
  std::int64_t m = 0;
  double a_prime = 0.0;
  std::uint64_t p = 0;
  std::int64_t a = 0;
  FWStatus valid = FWStatus::Degenerate;
};

struct FWBoundReport {
  FWInstance instance;
  BoundReport bound;
};

/// (s_max - a') / d with a' = s_max (2r^2 - 1) / (2r^2), i.e. s_max / (2 r^2 d).
/// Shared by both constructions so that they round identically. A value
/// within 1e-12 (relative) of an integer is taken to be that integer, so
/// r = 1/sqrt(2) lands on m/4 exactly and the strict search skips it.
inline double prime_search_point(double s_max, double r, double d) {
  const double x = s_max / (2.0 * (r * r) * d);
  const double k = std::round(x);
  return std::abs(x - k) <= 1e-12 * std::max(1.0, k) ? k : x;
}

inline double a_prime_of(double s_max, double r) {
  return s_max * (2.0 * r * r - 1.0) / (2.0 * r * r);
}

inline void require_radius_above_half(double r) {
  if (!(r > 0.5)) throw Error("radius not above one half");
}

inline FWInstance derive_instance(std::int64_t n, double r) {
  require_radius_above_half(r);
  FWInstance inst;
  inst.n = n;
  inst.r = r;
  if (n <= 4) return inst;
  inst.m = numtheory::largest_multiple_of_4_below(static_cast<double>(n));
  const auto m = static_cast<double>(inst.m);
  inst.a_prime = a_prime_of(m, r);
  inst.p = numtheory::next_prime_above(prime_search_point(m, r, 4.0));
  inst.a = inst.m - 4 * static_cast<std::int64_t>(inst.p);
  if (2 * inst.p > static_cast<std::uint64_t>(inst.m)) {
    inst.valid = FWStatus::PrimeTooLarge;
  } else if (4 * inst.p <= static_cast<std::uint64_t>(inst.m)) {
    inst.valid = FWStatus::PrimeTooSmall;
  } else if (inst.p == 2) {
    inst.valid = FWStatus::PrimeDividesModulus;
  } else {
    inst.valid = FWStatus::Ok;
  }
  return inst;
}

/// 2 q^q (1-q)^(1-q) with q = 1/(8r^2), evaluated in log space.
inline double gamma_of_r(double r) {
  if (!(r >= 0.5 - kRadiusSlack && r <= kInvSqrt2 + kRadiusSlack)) {
    throw Error("gamma formula valid only on (1/2, 1/sqrt(2)]");
  }
  const double q = std::clamp(1.0 / (8.0 * r * r), 0.25, 0.5);
  return std::exp(detail::kLn2 + q * std::log(q) + (1.0 - q) * std::log1p(-q));
}

inline FWBoundReport lower_bound(const FWInstance& inst) {
  switch (inst.valid) {
    case FWStatus::PrimeTooLarge: throw Error("bound trivial: p > m/2");
    case FWStatus::PrimeTooSmall: throw Error("congruence property fails: p <= m/4");
    case FWStatus::Degenerate: throw Error("degenerate dimension: n <= 4");
    default: break;
  }
  FWBoundReport report;
  report.instance = inst;
  report.bound.dimension = inst.n;
  report.bound.lower_bound = fw_ratio(static_cast<std::uint64_t>(inst.m), inst.p);
  report.bound.exceeds_lovasz = report.bound.lower_bound.exceeds(BigInt(inst.n + 1));
  if (inst.r <= kInvSqrt2 + kRadiusSlack) report.bound.gamma_at_r = gamma_of_r(inst.r);
  if (inst.valid == FWStatus::PrimeDividesModulus) {
    report.bound.warnings.emplace_back(
        "p = 2 divides the modulus 4; ratio reported without a congruence certificate");
  }
  return report;
}

/// p < m/2 - sqrt(m ln m / kappa), the hypothesis that forces chi > n + 1
/// for large n.
inline bool theorem5_condition(std::int64_t n, double r, double kappa) {
  if (!(kappa > 0.0 && kappa < 2.0)) throw Error("kappa must lie in (0, 2)");
  const FWInstance inst = derive_instance(n, r);
  if (inst.valid != FWStatus::Ok) {
    throw Error(std::string("instance not valid: ") + std::string(to_string(inst.valid)));
  }
  const auto m = static_cast<double>(inst.m);
  return static_cast<double>(inst.p) < m / 2.0 - std::sqrt(m * std::log(m) / kappa);
}

/// True when derive_instance(n, r) is usable and its bound beats n + 1.
inline bool exceeds_lovasz_at(std::int64_t n, double r) {
  if (!(r > 0.5)) return false;
  const FWInstance inst = derive_instance(n, r);
  if (inst.valid != FWStatus::Ok && inst.valid != FWStatus::PrimeDividesModulus) return false;
  return fw_ratio(static_cast<std::uint64_t>(inst.m), inst.p).exceeds(BigInt(n + 1));
}

struct ThresholdResult {
  std::int64_t n = 0;
  double radius = 0.0;  // smallest tested radius whose bound exceeds n + 1
  double below = 0.0;   // radius - tolerance side of the bracket, bound <= n + 1
  double tolerance = 0.0;
};

/// Bisection for the least r <= 1/sqrt(2) at which the bound exceeds n + 1.
/// Valid because p(r) is nonincreasing in r, so the bound is nondecreasing.
inline ThresholdResult lovasz_threshold_radius(std::int64_t n, double tolerance) {
  if (n < 5) throw Error("degenerate dimension: n <= 4");
  if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
  double lo = 0.5;
  double hi = kInvSqrt2;
  if (!exceeds_lovasz_at(n, hi)) throw Error("no threshold below 1/sqrt(2) at this n");
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (exceeds_lovasz_at(n, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {n, hi, lo, tolerance};
}

}  // namespace spherechi
