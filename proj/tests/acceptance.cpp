// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// values and the wall time of each check. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "spherechi/asymptotic.hpp"
#include "spherechi/combinatorics.hpp"
#include "spherechi/fw_bound.hpp"
#include "spherechi/general_bound.hpp"
#include "spherechi/graph_lab.hpp"
#include "spherechi/upper_bounds.hpp"

using namespace spherechi;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_seconds, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    v.pass = false;
    v.detail += "; over time budget";
  }
  if (!v.pass) ++failures;
  std::printf("criterion %2d %-28s %s  (%.3f s of %.3g s)  %s\n", id, name.c_str(), v.pass ? "PASS" : "FAIL",
              elapsed, budget_seconds, v.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double x, int digits = 7) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

// Trivial bound 1 when the prime is too large for the ratio to mean anything.
ExactRatio bound_or_one(std::int64_t n, double r) {
  const FWInstance inst = derive_instance(n, r);
  if (inst.valid == FWStatus::PrimeTooLarge) return ExactRatio::make(1, 1);
  return lower_bound(inst).bound.lower_bound;
}

Verdict gamma_limit() {
  const double g = gamma_of_r(kInvSqrt2);
  return {std::abs(g - 1.1398) <= 5e-4, "gamma(1/sqrt2) = " + fmt(g, 10)};
}

Verdict cell_diameter() {
  const double d3 = simplex_cell_diameter(3, 100).diameter;
  const double d2 = simplex_cell_diameter(2, 100).diameter;
  const double want3 = std::sqrt((3.0 + std::sqrt(3.0)) / 6.0);
  const double want2 = std::sqrt(3.0) / 2.0;
  const bool ok = std::abs(d3 - want3) <= 1e-4 && std::abs(d2 - want2) <= 1e-6;
  return {ok, "n=3: " + fmt(d3, 10) + " (want " + fmt(want3, 10) + "), n=2: " + fmt(d2, 10)};
}

Verdict congruence() {
  const DerivedParams dp = derive_general(ConstructionSpec::balanced_signs(8), 0.6);
  const GraphInstance g = build_graph(ConstructionSpec::balanced_signs(8), dp.a);
  const CensusReport c = census(g, dp.p, dp.d);
  std::set<std::int64_t> matching;
  for (const auto& [v, n] : c.counts) {
    if (((v - dp.s_max) % 3 + 3) % 3 == 0) matching.insert(v);
  }
  const bool first = dp.p == 3 && dp.a == -4 && matching == std::set<std::int64_t>{-4, 8} && c.congruence_ok;

  const ConstructionParams small = derive_parameters(ConstructionSpec::balanced_signs(4), 0.6);
  const GraphInstance h = build_graph(ConstructionSpec::balanced_signs(4), small.a);
  const CensusReport c4 = census(h, small.p, small.d);
  const bool second = small.p == 2 && !c4.congruence_ok;

  std::string keys;
  for (std::int64_t v : matching) keys += (keys.empty() ? "" : ",") + std::to_string(v);
  return {first && second, "m=8 keys = s_max mod 3: {" + keys + "}, m=4 p=2 check fails: " +
                               (second ? "yes" : "no")};
}

Verdict independence_chain() {
  const auto start = std::chrono::steady_clock::now();
  const GraphInstance g8 = build_graph(ConstructionSpec::balanced_signs(8), -4);
  const AlphaResult a8 = max_independent_set_exact(g8, 30.0);
  const AlphaBoundsReport b8 = verify_alpha_bounds(g8, a8, 3, 2);
  const bool ok8 = a8.exact && b8.monomial_bound == 37 && b8.binomial_bound == 56 && a8.alpha <= 37;

  const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const GraphInstance g12 = build_graph(ConstructionSpec::balanced_signs(12), -8);
  const AlphaResult a12 = max_independent_set_exact(g12, 58.0 - used);
  const AlphaBoundsReport b12 = verify_alpha_bounds(g12, a12, 5, 2);
  const bool ok12 = a12.exact && BigInt(a12.alpha) <= b12.monomial_bound;

  std::string detail = "m=8: alpha = " + std::to_string(a8.alpha) + (a8.exact ? " exact" : " partial") +
                       " <= 37 <= 56; m=12 (" + std::to_string(g12.vertex_count()) + " vertices): ";
  if (a12.exact) {
    detail += "alpha = " + std::to_string(a12.alpha) + " <= M = " + b12.monomial_bound.str();
  } else {
    detail += "exact alpha not reached, " + std::to_string(a12.alpha) + " <= alpha <= " +
              std::to_string(a12.upper_bound) + " (certified) <= M = " + b12.monomial_bound.str() +
              " after " + std::to_string(a12.nodes) + " nodes";
  }
  return {ok8 && ok12, detail};
}

Verdict certificate() {
  std::vector<ConstructionSpec> specs;
  for (std::uint64_t m = 4; m <= 12; m += 2) specs.push_back(ConstructionSpec::balanced_signs(m));
  specs.push_back(ConstructionSpec::make({1, -1}, {5, 2}));
  specs.push_back(ConstructionSpec::make({1, 0, -1}, {2, 2, 2}));
  specs.push_back(ConstructionSpec::make({2, 1, 0}, {2, 2, 3}));
  specs.push_back(ConstructionSpec::make({2, 0, -1}, {2, 3, 2}));
  specs.push_back(ConstructionSpec::make({3, 1, -1, -2}, {1, 2, 2, 1}));
  std::set<std::tuple<std::string, std::uint64_t, std::int64_t>> seen;
  std::mt19937_64 rng(1);
  std::size_t instances = 0;
  std::size_t sets = 0;
  std::size_t bad = 0;
  for (const ConstructionSpec& s : specs) {
    for (int i = 0; i <= 100; ++i) {
      const double r = 0.505 + 0.01 * i;
      const ConstructionParams p = derive_parameters(s, r);
      if (p.valid != GeneralStatus::Ok) continue;
      if (!seen.insert({format_construction_spec(s), p.p, p.a}).second) continue;
      ++instances;
      const GraphInstance g = build_graph(s, p.a);
      for (int k = 0; k < 20; ++k) {
        ++sets;
        if (!polynomial_certificate(g, random_maximal_independent_set(g, rng), p.p).ok()) ++bad;
      }
    }
  }
  return {bad == 0 && instances > 0, std::to_string(instances) + " instances, " + std::to_string(sets) +
                                         " maximal sets, " + std::to_string(bad) + " failures"};
}

Verdict ratio_asymptotics() {
  const double exact = fw_ratio(2000, 900).log_value;
  const double approx = 200.0 * 200.0 / 4000.0;
  const double rel = std::abs(exact - approx) / exact;
  return {rel <= 0.05, "ln ratio = " + fmt(exact) + ", approximation 10, relative gap " + fmt(rel, 4)};
}

Verdict sign_reduction() {
  const AsymptoticSpec spec{{1, -1}, {0.5, 0.5}};
  double worst = 0.0;
  for (double r : {0.55, 0.6, 0.65, kInvSqrt2}) {
    worst = std::max(worst, std::abs(exponent_bound(spec, r).exponent - std::log(gamma_of_r(r))));
  }
  return {worst <= 1e-6, "max |exponent - ln gamma| = " + fmt(worst, 3)};
}

Verdict entropy_oracle() {
  const EntropyOptimum opt = max_entropy_M0(3, 0.5);
  const double grid = std::exp(oracle::grid_max_entropy_t3(0.5, 1e-3));
  const double gap = std::abs(opt.M0 - grid);
  double residual = 0.0;
  const double ref = std::log(opt.s0_star[0]) + 1.0 + opt.lambda * slot_weight(0, 3);
  for (std::size_t i = 1; i < 3; ++i) {
    residual = std::max(residual, std::abs(std::log(opt.s0_star[i]) + 1.0 + opt.lambda * slot_weight(i, 3) - ref));
  }
  double weighted = 0.0;
  for (std::size_t i = 0; i < 3; ++i) weighted += slot_weight(i, 3) * opt.s0_star[i];
  const double slack = opt.lambda > 0.0 ? std::abs(weighted - 0.5) : std::max(0.0, weighted - 0.5);
  residual = std::max(residual, slack);
  return {gap <= 1e-4 && residual <= 1e-8, "M0 = " + fmt(opt.M0, 10) + ", grid " + fmt(grid, 10) +
                                               ", KKT residual " + fmt(residual, 3)};
}

Verdict pipeline_equivalence() {
  std::size_t pairs = 0;
  std::size_t matched = 0;
  std::size_t compared = 0;
  std::size_t dominated = 0;
  std::string first_miss;
  for (std::int64_t n = 10; n <= 100; n += 10) {
    for (double r : {0.55, 0.6, 0.65, 0.7, kInvSqrt2}) {
      ++pairs;
      const FWInstance inst = derive_instance(n, r);
      const auto m = static_cast<std::uint64_t>(inst.m);
      const DerivedParams dp = derive_general(ConstructionSpec::balanced_signs(m), r);
      if (static_cast<std::int64_t>(m) == inst.m && dp.p == inst.p && dp.a == inst.a) ++matched;
      if (inst.valid != FWStatus::Ok || dp.valid != GeneralStatus::Ok) continue;
      ++compared;
      const ExactRatio general = ExactRatio::make(dp.L, dp.M);
      const ExactRatio balanced = fw_ratio(m, inst.p);
      if (!(general < balanced)) {
        ++dominated;
      } else if (first_miss.empty()) {
        first_miss = "; first shortfall n=" + std::to_string(n) + " r=" + fmt(r, 4) + ": " + general.str() +
                     " < " + balanced.str();
      }
    }
  }
  const bool ok = pairs == 50 && matched == 50 && dominated == compared;
  return {ok, std::to_string(matched) + "/" + std::to_string(pairs) + " parameter matches, L/M >= ratio on " +
                  std::to_string(dominated) + "/" + std::to_string(compared) + " valid pairs" + first_miss};
}

Verdict monotonicity() {
  std::size_t ratio_checks = 0;
  bool ratio_ok = true;
  for (std::uint64_t m = 2; m <= 200; m += 2) {
    for (std::uint64_t p = 1; p + 1 <= m / 2; ++p) {
      ++ratio_checks;
      if (!(fw_ratio(m, p + 1) < fw_ratio(m, p))) ratio_ok = false;
    }
  }
  bool radius_ok = true;
  for (std::int64_t n : {50, 100, 200, 400}) {
    std::optional<ExactRatio> previous;
    for (int i = 0; i < 100; ++i) {
      const double r = 0.505 + (kInvSqrt2 - 0.505) * i / 99.0;
      const ExactRatio now = bound_or_one(n, r);
      if (previous && now < *previous) radius_ok = false;
      previous = now;
    }
  }
  bool threshold_ok = true;
  std::string radii;
  for (std::int64_t n : {500, 1000}) {
    const ThresholdResult th = lovasz_threshold_radius(n, 1e-6);
    const bool post = exceeds_lovasz_at(n, th.radius) && !exceeds_lovasz_at(n, th.radius - th.tolerance);
    threshold_ok = threshold_ok && post;
    radii += (radii.empty() ? "" : ", ") + std::to_string(n) + " -> " + fmt(th.radius, 8);
  }
  return {ratio_ok && radius_ok && threshold_ok,
          std::to_string(ratio_checks) + " ratio steps " + (ratio_ok ? "ok" : "BAD") + ", radius grids " +
              (radius_ok ? "ok" : "BAD") + ", thresholds " + radii};
}

}  // namespace

int main() {
  criterion(1, "gamma limit", 1e-3, gamma_limit);
  criterion(2, "simplex cell diameter", 10.0, cell_diameter);
  criterion(3, "congruence property", 1.0, congruence);
  criterion(4, "independence bound chain", 60.0, independence_chain);
  criterion(5, "polynomial certificate", 30.0, certificate);
  criterion(6, "ratio asymptotics", 5.0, ratio_asymptotics);
  criterion(7, "balanced-sign reduction", 1.0, sign_reduction);
  criterion(8, "entropy solver oracle", 30.0, entropy_oracle);
  criterion(9, "pipeline equivalence", 5.0, pipeline_equivalence);
  criterion(10, "monotonicity properties", 60.0, monotonicity);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
