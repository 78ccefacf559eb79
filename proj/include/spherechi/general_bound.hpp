#pragma once

/**
 * @file general_bound.hpp
 * @brief Lower bounds from vectors over an integer alphabet b_1..b_t with
 * prescribed multiplicities l_1..l_t.
 *
 * V is the set of all arrangements of the multiset {b_j with multiplicity
 * l_j}. With s_max, s_min the extreme inner products on V and d the largest
 * integer dividing all of them, the prime p just above s_max / (2 r^2 d)
 * fixes the forbidden product a = s_max - d p and the bound is L / M
 * (L = |V|, M = monomial_count_M(m, t, p)).
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <exception>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "fw_bound.hpp"
#include "numtheory.hpp"

namespace spherechi {

struct ConstructionSpec {
  std::vector<std::int64_t> b;   // coordinate values, pairwise distinct
  std::vector<std::uint64_t> l;  // multiplicities, positive

  [[nodiscard]] std::size_t t() const { return b.size(); }
  [[nodiscard]] std::uint64_t m() const {
    return std::accumulate(l.begin(), l.end(), std::uint64_t{0});
  }

  /// Throws unless t >= 2, sizes agree, b distinct and every l_j > 0.
  void validate() const {
    if (b.size() < 2) throw Error("construction needs t >= 2 coordinate values");
    if (b.size() != l.size()) throw Error("construction: b and l have different lengths");
    for (std::uint64_t lj : l) {
      if (lj == 0) throw Error("construction: multiplicities must be positive");
    }
    std::vector<std::int64_t> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("construction: coordinate values must be distinct");
    }
  }

  static ConstructionSpec make(std::vector<std::int64_t> b, std::vector<std::uint64_t> l) {
    ConstructionSpec spec{std::move(b), std::move(l)};
    spec.validate();
    return spec;
  }

  /// Balanced +-1 vectors of length m.
  static ConstructionSpec balanced_signs(std::uint64_t m) {
    return make({1, -1}, {m / 2, m - m / 2});
  }
};

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

template <typename Int>
std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  for (const std::string& item : split(text, ',')) {
    const std::string token = trim(item);
    if (token.empty()) throw Error("malformed integer list: '" + std::string(text) + "'");
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw Error("malformed integer: '" + token + "'");
    }
    if (used != token.size()) throw Error("malformed integer: '" + token + "'");
    if constexpr (std::is_unsigned_v<Int>) {
      if (value < 0) throw Error("multiplicities must be nonnegative: '" + token + "'");
    }
    out.push_back(static_cast<Int>(value));
  }
  return out;
}

}  // namespace detail

/// Text record "t=2;b=1,-1;l=4,4". The t field is optional but, when
/// present, must match the list lengths.
inline ConstructionSpec parse_construction_spec(std::string_view text) {
  std::vector<std::int64_t> b;
  std::vector<std::uint64_t> l;
  long long t = -1;
  for (const std::string& raw : detail::split(text, ';')) {
    const std::string field = detail::trim(raw);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw Error("malformed construction field: '" + field + "'");
    const std::string key = detail::trim(std::string_view(field).substr(0, eq));
    const std::string value = detail::trim(std::string_view(field).substr(eq + 1));
    if (key == "t") {
      t = detail::parse_int_list<long long>(value).at(0);
    } else if (key == "b") {
      b = detail::parse_int_list<std::int64_t>(value);
    } else if (key == "l") {
      l = detail::parse_int_list<std::uint64_t>(value);
    } else {
      throw Error("unknown construction field: '" + key + "'");
    }
  }
  if (t >= 0 && static_cast<std::size_t>(t) != b.size()) {
    throw Error("construction: t does not match the number of coordinate values");
  }
  return ConstructionSpec::make(std::move(b), std::move(l));
}

inline std::string format_construction_spec(const ConstructionSpec& spec) {
  std::ostringstream os;
  os << "t=" << spec.t() << ";b=";
  for (std::size_t j = 0; j < spec.t(); ++j) os << (j ? "," : "") << spec.b[j];
  os << ";l=";
  for (std::size_t j = 0; j < spec.t(); ++j) os << (j ? "," : "") << spec.l[j];
  return os.str();
}

/// s_max = sum_j l_j b_j^2, attained at x = y.
inline std::int64_t self_product(const ConstructionSpec& spec) {
  spec.validate();
  std::int64_t total = 0;
  for (std::size_t j = 0; j < spec.t(); ++j) {
    total += static_cast<std::int64_t>(spec.l[j]) * spec.b[j] * spec.b[j];
  }
  return total;
}

/// s_min: one vector sorted ascending against the other sorted descending.
/// Walks the two run-length encodings, so the cost is O(t) rather than O(m).
inline std::int64_t min_product(const ConstructionSpec& spec) {
  spec.validate();
  std::vector<std::pair<std::int64_t, std::uint64_t>> runs;
  for (std::size_t j = 0; j < spec.t(); ++j) runs.emplace_back(spec.b[j], spec.l[j]);
  std::sort(runs.begin(), runs.end());
  auto asc = runs;
  auto desc = runs;
  std::reverse(desc.begin(), desc.end());
  std::int64_t total = 0;
  std::size_t i = 0;
  std::size_t k = 0;
  std::uint64_t left_i = asc[0].second;
  std::uint64_t left_k = desc[0].second;
  while (i < asc.size() && k < desc.size()) {
    const std::uint64_t take = std::min(left_i, left_k);
    total += static_cast<std::int64_t>(take) * asc[i].first * desc[k].first;
    left_i -= take;
    left_k -= take;
    if (left_i == 0 && ++i < asc.size()) left_i = asc[i].second;
    if (left_k == 0 && ++k < desc.size()) left_k = desc[k].second;
  }
  return total;
}

/// gcd of all (b_j - b_j')(b_k - b_k') with j != j', k != k'. Every such
/// transposition delta is realisable once all multiplicities are positive.
inline std::uint64_t swap_delta_gcd(std::span<const std::int64_t> b) {
  std::uint64_t g = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t jj = j + 1; jj < b.size(); ++jj) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        for (std::size_t kk = k + 1; kk < b.size(); ++kk) {
          const std::int64_t delta = (b[j] - b[jj]) * (b[k] - b[kk]);
          g = std::gcd(g, static_cast<std::uint64_t>(delta < 0 ? -delta : delta));
        }
      }
    }
  }
  return g;
}

/// d: the largest integer dividing every inner product on V. Zero only when
/// every inner product vanishes.
inline std::uint64_t modulus_d(const ConstructionSpec& spec) {
  const std::int64_t s_max = self_product(spec);
  return std::gcd(static_cast<std::uint64_t>(s_max < 0 ? -s_max : s_max), swap_delta_gcd(spec.b));
}

enum class GeneralStatus {
  Ok,
  ConditionAFailed,     // a <= s_min
  ConditionSpanFailed,  // s_max - 2dp >= s_min
  PrimeDividesModulus,  // p | d
};

inline std::string_view to_string(GeneralStatus s) {
  switch (s) {
    case GeneralStatus::Ok: return "OK";
    case GeneralStatus::ConditionAFailed: return "ConditionAFailed";
    case GeneralStatus::ConditionSpanFailed: return "ConditionSpanFailed";
    case GeneralStatus::PrimeDividesModulus: return "PrimeDividesModulus";
  }
  return "?";
}

/// Everything except the (possibly huge) counts L and M.
struct ConstructionParams {
  std::uint64_t d = 0;
  std::int64_t s_max = 0;
  std::int64_t s_min = 0;
  double a_prime = 0.0;
  std::uint64_t p = 0;
  std::int64_t a = 0;
  GeneralStatus valid = GeneralStatus::Ok;
};

struct DerivedParams : ConstructionParams {
  BigInt L;
  BigInt M;
};

inline ConstructionParams derive_parameters(const ConstructionSpec& spec, double r) {
  require_radius_above_half(r);
  ConstructionParams out;
  out.s_max = self_product(spec);
  out.s_min = min_product(spec);
  out.d = modulus_d(spec);
  if (out.d == 0) throw Error("degenerate modulus");
  const auto s_max = static_cast<double>(out.s_max);
  out.a_prime = a_prime_of(s_max, r);
  out.p = numtheory::next_prime_above(prime_search_point(s_max, r, static_cast<double>(out.d)));
  const auto dp = static_cast<std::int64_t>(out.d * out.p);
  out.a = out.s_max - dp;
  if (out.d % out.p == 0) {
    out.valid = GeneralStatus::PrimeDividesModulus;
  } else if (out.a <= out.s_min) {
    out.valid = GeneralStatus::ConditionAFailed;
  } else if (out.s_max - 2 * dp >= out.s_min) {
    out.valid = GeneralStatus::ConditionSpanFailed;
  } else {
    out.valid = GeneralStatus::Ok;
  }
  return out;
}

inline DerivedParams derive_general(const ConstructionSpec& spec, double r) {
  DerivedParams out;
  static_cast<ConstructionParams&>(out) = derive_parameters(spec, r);
  out.L = multinomial(spec.m(), spec.l);
  out.M = monomial_count_M(spec.m(), spec.t(), out.p);
  return out;
}

struct GeneralBoundReport {
  ConstructionSpec spec;
  DerivedParams params;
  BoundReport bound;
};

/// L / M, reported in ambient dimension n = m + 1: V lies on a sphere in
/// R^m of radius below r, and chi(S_r^{n-1}) only grows with n.
inline GeneralBoundReport bound_general(const ConstructionSpec& spec, double r) {
  GeneralBoundReport report;
  report.spec = spec;
  report.params = derive_general(spec, r);
  if (report.params.valid != GeneralStatus::Ok) {
    throw Error(std::string("construction invalid: ") + std::string(to_string(report.params.valid)));
  }
  report.bound.dimension = static_cast<std::int64_t>(spec.m()) + 1;
  report.bound.lower_bound = ExactRatio::make(report.params.L, report.params.M);
  report.bound.exceeds_lovasz =
      report.bound.lower_bound.exceeds(BigInt(report.bound.dimension + 1));
  if (r <= kInvSqrt2 + kRadiusSlack) report.bound.gamma_at_r = gamma_of_r(r);
  return report;
}

}  // namespace spherechi
