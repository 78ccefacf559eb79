#pragma once

/**
 * @file cli.hpp
 * @brief Subcommand front end over the library.
 *
 * run() takes the argument vector without the program name and returns the
 * process exit status: 0 on success, 1 for a bad command line, 2 when a
 * computation fails (its error text is printed as is).
 */

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "asymptotic.hpp"
#include "combinatorics.hpp"
#include "error.hpp"
#include "fw_bound.hpp"
#include "general_bound.hpp"
#include "graph_lab.hpp"
#include "report.hpp"
#include "upper_bounds.hpp"

namespace spherechi::cli {

/// A command line that parsed but does not describe a runnable job.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<std::int64_t> n;
  std::string n_range;
  std::optional<double> r;
  std::string r_range;
  double kappa = 1.9;
  double c = 1.0;
  std::size_t t_max = 4;
  std::int64_t b_max = 3;
  std::size_t starts = 8;
  int restarts = 100;
  std::uint64_t seed = 1;
  std::size_t size_cap = kDefaultSizeCap;
  double tolerance = 1e-6;
  double timeout = 60.0;
  std::uint64_t node_limit = 0;
  int samples = 20;
  std::string spec_text;
  std::optional<std::size_t> t;
  std::string b_list;
  std::string l_list;
  std::string export_edges;
  std::string format = "table";
  std::string output;
};

/// "start:stop:step"; the stop value is kept when it falls within half a
/// step of the grid. A bare number is a one-point range.
inline std::vector<double> parse_real_range(const std::string& text) {
  const auto parts = detail::split(text, ':');
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(detail::trim(s), &used);
      if (used != detail::trim(s).size()) throw ConfigError("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("malformed range: '" + text + "'");
    }
  };
  if (parts.size() == 1) return {number(parts[0])};
  if (parts.size() != 3) throw ConfigError("range must be start:stop:step: '" + text + "'");
  const double start = number(parts[0]);
  const double stop = number(parts[1]);
  const double step = number(parts[2]);
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw ConfigError("range needs a positive step: '" + text + "'");
  }
  if (stop < start) throw ConfigError("empty range: '" + text + "'");
  const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 0.5)) + 1;
  if (count > 10'000'000) throw ConfigError("range too long: '" + text + "'");
  std::vector<double> out;
  for (std::int64_t k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
  return out;
}

inline std::vector<std::int64_t> parse_int_range(const std::string& text) {
  const auto parts = detail::split(text, ':');
  auto number = [&](const std::string& s) {
    const auto v = detail::parse_int_list<long long>(s);
    if (v.size() != 1) throw ConfigError("malformed range: '" + text + "'");
    return static_cast<std::int64_t>(v[0]);
  };
  try {
    if (parts.size() == 1) return {number(parts[0])};
    if (parts.size() != 3) throw ConfigError("range must be start:stop:step: '" + text + "'");
    const std::int64_t start = number(parts[0]);
    const std::int64_t stop = number(parts[1]);
    const std::int64_t step = number(parts[2]);
    if (step <= 0) throw ConfigError("range needs a positive step: '" + text + "'");
    if (stop < start) throw ConfigError("empty range: '" + text + "'");
    std::vector<std::int64_t> out;
    for (std::int64_t v = start; v <= stop; v += step) out.push_back(v);
    return out;
  } catch (const Error&) {
    throw ConfigError("malformed range: '" + text + "'");
  }
}

namespace detail {

using report::Record;
using report::Report;

inline std::vector<std::int64_t> dimensions(const RunConfig& cfg) {
  if (cfg.n && !cfg.n_range.empty()) throw ConfigError("give --n or --n-range, not both");
  if (cfg.n) return {*cfg.n};
  if (!cfg.n_range.empty()) return parse_int_range(cfg.n_range);
  throw ConfigError(cfg.command + ": --n or --n-range is required");
}

inline std::vector<double> radii(const RunConfig& cfg) {
  if (cfg.r && !cfg.r_range.empty()) throw ConfigError("give --r or --r-range, not both");
  if (cfg.r) return {*cfg.r};
  if (!cfg.r_range.empty()) return parse_real_range(cfg.r_range);
  throw ConfigError(cfg.command + ": --r or --r-range is required");
}

inline bool has_construction(const RunConfig& cfg) {
  return !cfg.spec_text.empty() || cfg.t || !cfg.b_list.empty() || !cfg.l_list.empty();
}

inline ConstructionSpec construction(const RunConfig& cfg) {
  try {
    if (!cfg.spec_text.empty()) {
      if (cfg.t || !cfg.b_list.empty() || !cfg.l_list.empty()) {
        throw ConfigError("give --spec or --t/--b/--l, not both");
      }
      return parse_construction_spec(cfg.spec_text);
    }
    if (cfg.b_list.empty() || cfg.l_list.empty()) throw ConfigError("construction needs --b and --l");
    ConstructionSpec spec = ConstructionSpec::make(spherechi::detail::parse_int_list<std::int64_t>(cfg.b_list),
                                                   spherechi::detail::parse_int_list<std::uint64_t>(cfg.l_list));
    if (cfg.t && *cfg.t != spec.t()) {
      throw ConfigError("construction: t does not match the number of coordinate values");
    }
    return spec;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + report::format_double(v[i]);
  return s;
}

// One point of a sweep: computation errors become the row status when the
// sweep has several points, and abort the run otherwise.
template <typename Fn>
void sweep_point(Report& rep, bool sweep, Record base, Fn&& fn) {
  const std::size_t slot = base.fields.size();
  if (sweep) base.add("status", std::string("OK"));
  try {
    fn(base);
  } catch (const Error& e) {
    if (!sweep) throw;
    base.fields[slot].second = std::string(e.what());
  }
  rep.results.push_back(std::move(base));
}

inline void add_ratio(Record& rec, const ExactRatio& ratio) {
  rec.add("bound", ratio.str());
  rec.add("log_bound", ratio.log_value);
}

inline void bound_fw(const RunConfig& cfg, Report& rep) {
  const auto ns = dimensions(cfg);
  const auto rs = radii(cfg);
  const bool sweep = ns.size() * rs.size() > 1;
  for (std::int64_t n : ns) {
    for (double r : rs) {
      Record base;
      base.add("n", n).add("r", r);
      sweep_point(rep, sweep, std::move(base), [&](Record& rec) {
        require_radius_above_half(r);
        const FWInstance inst = derive_instance(n, r);
        rec.add("m", inst.m).add("a_prime", inst.a_prime);
        rec.add("p", static_cast<std::int64_t>(inst.p)).add("a", inst.a);
        rec.add("d", std::int64_t{4}).add("s_max", inst.m).add("s_min", -inst.m);
        rec.add("validity", std::string(to_string(inst.valid)));
        const FWBoundReport out = lower_bound(inst);
        const auto m = static_cast<std::uint64_t>(inst.m);
        rec.add("L", binomial(m, inst.m / 2).str());
        rec.add("M", binomial(m, static_cast<std::int64_t>(inst.p)).str());
        add_ratio(rec, out.bound.lower_bound);
        rec.add("exceeds_lovasz", out.bound.exceeds_lovasz);
        if (out.bound.gamma_at_r) rec.add("gamma", *out.bound.gamma_at_r);
        if (inst.valid == FWStatus::Ok) rec.add("theorem5_condition", theorem5_condition(n, r, cfg.kappa));
        for (const std::string& w : out.bound.warnings) {
          rep.warnings.push_back("n=" + std::to_string(n) + " r=" + report::format_double(r) + ": " + w);
        }
      });
    }
  }
}

inline void bound_general_cmd(const RunConfig& cfg, Report& rep) {
  if (cfg.n || !cfg.n_range.empty()) throw ConfigError("--n does not apply to a construction; it fixes m");
  const ConstructionSpec spec = construction(cfg);
  const auto rs = radii(cfg);
  const bool sweep = rs.size() > 1;
  for (double r : rs) {
    Record base;
    base.add("spec", format_construction_spec(spec)).add("r", r);
    sweep_point(rep, sweep, std::move(base), [&](Record& rec) {
      const DerivedParams dp = derive_general(spec, r);
      rec.add("n", static_cast<std::int64_t>(spec.m()) + 1);
      rec.add("m", static_cast<std::int64_t>(spec.m())).add("a_prime", dp.a_prime);
      rec.add("p", static_cast<std::int64_t>(dp.p)).add("a", dp.a);
      rec.add("d", static_cast<std::int64_t>(dp.d)).add("s_max", dp.s_max).add("s_min", dp.s_min);
      rec.add("validity", std::string(to_string(dp.valid)));
      rec.add("L", dp.L.str()).add("M", dp.M.str());
      const GeneralBoundReport out = bound_general(spec, r);
      add_ratio(rec, out.bound.lower_bound);
      rec.add("exceeds_lovasz", out.bound.exceeds_lovasz);
      if (out.bound.gamma_at_r) rec.add("gamma", *out.bound.gamma_at_r);
    });
  }
}

inline void gamma_cmd(const RunConfig& cfg, Report& rep) {
  const auto rs = radii(cfg);
  for (double r : rs) {
    Record rec;
    rec.add("r", r);
    rec.add("gamma", gamma_of_r(r));
    rep.results.push_back(std::move(rec));
  }
}

inline void verify_cmd(const RunConfig& cfg, Report& rep) {
  const ConstructionSpec spec = construction(cfg);
  if (!cfg.r || !cfg.r_range.empty()) throw ConfigError("verify: a single --r is required");
  if (cfg.samples < 0) throw ConfigError("verify: --samples must be nonnegative");
  const double r = *cfg.r;
  const DerivedParams dp = derive_general(spec, r);
  const GraphInstance g = build_graph(spec, dp.a, cfg.size_cap);
  if (!cfg.export_edges.empty()) {
    std::ofstream edges(cfg.export_edges);
    if (!edges) throw Error("cannot open edge-list file: " + cfg.export_edges);
    export_edge_list(g, edges);
  }
  const CensusReport cen = census(g, dp.p, dp.d);
  const AlphaResult alpha = max_independent_set_exact(g, cfg.timeout, cfg.node_limit);
  const AlphaBoundsReport bounds = verify_alpha_bounds(g, alpha, dp.p, spec.t());

  bool certificate_ok = true;
  std::size_t sets_tested = 0;
  if (dp.p >= 2) {
    std::mt19937_64 rng(cfg.seed);
    auto check = [&](const std::vector<std::size_t>& set) {
      const CertificateReport cert = polynomial_certificate(g, set, dp.p);
      certificate_ok = certificate_ok && cert.ok();
      ++sets_tested;
    };
    check(alpha.witness);
    for (int i = 0; i < cfg.samples; ++i) check(random_maximal_independent_set(g, rng));
  }
  const Coloring col = greedy_coloring(g, ColoringOrder::DSatur);

  Record rec;
  rec.add("spec", format_construction_spec(spec)).add("r", r);
  rec.add("m", static_cast<std::int64_t>(spec.m())).add("a_prime", dp.a_prime);
  rec.add("p", static_cast<std::int64_t>(dp.p)).add("a", dp.a);
  rec.add("d", static_cast<std::int64_t>(dp.d)).add("s_max", dp.s_max).add("s_min", dp.s_min);
  rec.add("validity", std::string(to_string(dp.valid)));
  rec.add("L", dp.L.str()).add("M", dp.M.str());
  rec.add("vertices", static_cast<std::int64_t>(g.vertex_count()));
  rec.add("edges", static_cast<std::int64_t>(g.edge_count));
  std::string keys;
  for (const auto& [v, count] : cen.counts) {
    keys += (keys.empty() ? "" : ";") + std::to_string(v) + ":" + std::to_string(count);
  }
  rec.add("census", keys);
  rec.add("census_ok", cen.congruence_ok && cen.modulus_ok);
  rec.add("alpha", static_cast<std::int64_t>(alpha.alpha));
  rec.add("alpha_exact", alpha.exact);
  rec.add("alpha_upper", static_cast<std::int64_t>(bounds.alpha_upper));
  rec.add("binomial_bound", bounds.binomial_bound.str());
  rec.add("within_monomial", bounds.within_monomial);
  rec.add("within_binomial", bounds.within_binomial);
  rec.add("tighter", bounds.tighter);
  rec.add("certificate_ok", certificate_ok);
  rec.add("certificate_sets", static_cast<std::int64_t>(sets_tested));
  rec.add("colors_dsatur", static_cast<std::int64_t>(col.colors_used));
  rep.results.push_back(std::move(rec));

  if (dp.valid != GeneralStatus::Ok) rep.warnings.push_back("construction invalid: " + std::string(to_string(dp.valid)));
  if (!cen.congruence_ok) rep.warnings.push_back("census: congruence property fails");
  if (!cen.modulus_ok) rep.warnings.push_back("census: some inner product is not divisible by d");
  if (!alpha.exact) rep.warnings.push_back("alpha search interrupted; alpha is a lower bound");
  if (!certificate_ok) rep.warnings.push_back("polynomial certificate fails");
}

inline void optimize_cmd(const RunConfig& cfg, Report& rep) {
  if (!cfg.r || !cfg.r_range.empty()) throw ConfigError("optimize: a single --r is required");
  SearchConfig search;
  search.t_max = cfg.t_max;
  search.b_max = cfg.b_max;
  search.starts = cfg.starts;
  search.seed = cfg.seed;
  if (search.t_max < 2) throw ConfigError("optimize: --t-max must be at least 2");
  if (search.b_max < 1) throw ConfigError("optimize: --b-max must be at least 1");
  const OptimizationResult out = optimize_gamma(*cfg.r, search);
  for (const auto& [role, cand] : {std::pair{"best", &out.best}, std::pair{"baseline", &out.baseline}}) {
    Record rec;
    rec.add("role", std::string(role)).add("r", *cfg.r);
    rec.add("b", join(cand->spec.b)).add("l0", join(cand->spec.l0));
    rec.add("rho", cand->result.rho).add("M0", cand->result.M0).add("L0", cand->result.L0);
    rec.add("exponent", cand->result.exponent).add("gamma", std::exp(cand->result.exponent));
    rec.add("validated", cand->validated);
    rec.add("alphabets_examined", static_cast<std::int64_t>(out.alphabets_examined));
    rec.add("alphabets_rejected", static_cast<std::int64_t>(out.alphabets_rejected));
    rep.results.push_back(std::move(rec));
  }
  if (!out.baseline.validated) rep.warnings.push_back("baseline not validated at finite n");
}

inline void threshold_cmd(const RunConfig& cfg, Report& rep) {
  const auto ns = dimensions(cfg);
  const bool sweep = ns.size() > 1;
  if (!(cfg.tolerance > 0.0)) throw ConfigError("threshold: --tolerance must be positive");
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::int64_t n : ns) {
    Record base;
    base.add("n", n);
    sweep_point(rep, sweep, std::move(base), [&](Record& rec) {
      const ThresholdResult th = lovasz_threshold_radius(n, cfg.tolerance);
      const double x = std::sqrt(std::log(static_cast<double>(n)) / static_cast<double>(n));
      rec.add("radius", th.radius).add("below", th.below);
      rec.add("c_point", (th.radius - 0.5) / x);
      sxy += x * (th.radius - 0.5);
      sxx += x * x;
    });
  }
  // Least squares through the origin for r - 1/2 = c sqrt(ln n / n).
  if (sxx > 0.0) {
    for (auto& rec : rep.results) rec.add("c_fit", sxy / sxx);
  }
}

inline void cover_cmd(const RunConfig& cfg, Report& rep) {
  const auto ns = dimensions(cfg);
  const auto rs = radii(cfg);
  if (!(cfg.c > 0.0)) throw ConfigError("cover: --c must be positive");
  const bool sweep = ns.size() * rs.size() > 1;
  for (std::int64_t n : ns) {
    for (double r : rs) {
      Record base;
      base.add("n", n).add("r", r);
      sweep_point(rep, sweep, std::move(base), [&](Record& rec) {
        rec.add("c", cfg.c);
        rec.add("euclidean_log", static_cast<double>(n) * std::log(3.0));
        if (n >= 9) rec.add("rogers_log", rogers_upper(n, r, cfg.c));
        const LabelledBound best = best_upper(n, r, cfg.c, cfg.restarts, cfg.seed);
        rec.add("best_rule", best.rule).add("best_log", best.log_value);
      });
    }
  }
  rep.warnings.push_back("euclidean-base-3 is a reference base with the o(1) term dropped");
}

inline void partition_cmd(const RunConfig& cfg, Report& rep) {
  const auto ns = dimensions(cfg);
  const bool sweep = ns.size() > 1;
  if (cfg.restarts < 0) throw ConfigError("partition: --restarts must be nonnegative");
  for (std::int64_t n : ns) {
    Record base;
    base.add("n", n);
    sweep_point(rep, sweep, std::move(base), [&](Record& rec) {
      const PartitionDiameter pd = simplex_cell_diameter(n, cfg.restarts, cfg.seed);
      rec.add("diameter", pd.diameter).add("inflation", pd.inflation);
      rec.add("radius_threshold", pd.radius_threshold).add("c2_estimate", pd.c2_estimate);
    });
  }
  rep.warnings.push_back("diameters are numerical, best-effort lower estimates");
}

inline nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  if (cfg.n) j["n"] = *cfg.n;
  if (!cfg.n_range.empty()) j["n_range"] = cfg.n_range;
  if (cfg.r) j["r"] = *cfg.r;
  if (!cfg.r_range.empty()) j["r_range"] = cfg.r_range;
  if (!cfg.spec_text.empty()) j["spec"] = cfg.spec_text;
  if (cfg.t) j["t"] = *cfg.t;
  if (!cfg.b_list.empty()) j["b"] = cfg.b_list;
  if (!cfg.l_list.empty()) j["l"] = cfg.l_list;
  j["kappa"] = cfg.kappa;
  j["c"] = cfg.c;
  j["t_max"] = cfg.t_max;
  j["b_max"] = cfg.b_max;
  j["starts"] = cfg.starts;
  j["restarts"] = cfg.restarts;
  j["seed"] = cfg.seed;
  j["size_cap"] = cfg.size_cap;
  j["tolerance"] = cfg.tolerance;
  j["timeout"] = cfg.timeout;
  j["node_limit"] = cfg.node_limit;
  j["samples"] = cfg.samples;
  j["format"] = cfg.format;
  return j;
}

}  // namespace detail

/// Computes the report for an already parsed configuration.
inline report::Report execute(const RunConfig& cfg) {
  report::Report rep;
  rep.command = cfg.command;
  rep.config = detail::config_json(cfg);
  if (cfg.command == "bound") {
    if (detail::has_construction(cfg)) {
      detail::bound_general_cmd(cfg, rep);
    } else {
      detail::bound_fw(cfg, rep);
    }
  } else if (cfg.command == "gamma") {
    detail::gamma_cmd(cfg, rep);
  } else if (cfg.command == "verify") {
    detail::verify_cmd(cfg, rep);
  } else if (cfg.command == "optimize") {
    detail::optimize_cmd(cfg, rep);
  } else if (cfg.command == "threshold") {
    detail::threshold_cmd(cfg, rep);
  } else if (cfg.command == "cover") {
    detail::cover_cmd(cfg, rep);
  } else if (cfg.command == "partition") {
    detail::partition_cmd(cfg, rep);
  } else {
    throw ConfigError("a subcommand is required");
  }
  return rep;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds on the chromatic number of spheres", "spherechi"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_points = [&](CLI::App* sub, bool with_n, bool with_r) {
    if (with_n) {
      sub->add_option("--n", cfg.n, "dimension");
      sub->add_option("--n-range", cfg.n_range, "dimensions start:stop:step");
    }
    if (with_r) {
      sub->add_option("--r", cfg.r, "sphere radius");
      sub->add_option("--r-range", cfg.r_range, "radii start:stop:step");
    }
  };
  auto add_construction = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_text, "construction record, e.g. t=2;b=1,-1;l=4,4");
    sub->add_option("--t", cfg.t, "number of coordinate values");
    sub->add_option("--b", cfg.b_list, "coordinate values, comma separated");
    sub->add_option("--l", cfg.l_list, "multiplicities, comma separated");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--output", cfg.output, "write the report to this file");
  };

  CLI::App* bound = app.add_subcommand("bound", "lower bound at (n, r), or for a construction");
  add_points(bound, true, true);
  add_construction(bound);
  bound->add_option("--kappa", cfg.kappa, "constant in the dimension condition");
  CLI::App* gamma = app.add_subcommand("gamma", "exponent base gamma(r)");
  add_points(gamma, false, true);
  CLI::App* verify = app.add_subcommand("verify", "build the graph of a construction and check it");
  add_construction(verify);
  add_points(verify, false, true);
  verify->add_option("--size-cap", cfg.size_cap, "largest vertex count to build");
  verify->add_option("--timeout", cfg.timeout, "seconds for the independence search");
  verify->add_option("--node-limit", cfg.node_limit, "node budget for the independence search (0: none)");
  verify->add_option("--samples", cfg.samples, "random maximal independent sets to certify");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--export-edges", cfg.export_edges, "write the edge list to this file");
  CLI::App* optimize = app.add_subcommand("optimize", "search alphabets for a larger exponent");
  add_points(optimize, false, true);
  optimize->add_option("--t-max", cfg.t_max, "largest alphabet size");
  optimize->add_option("--b-max", cfg.b_max, "largest coordinate magnitude");
  optimize->add_option("--starts", cfg.starts, "local-search starts per alphabet");
  optimize->add_option("--seed", cfg.seed, "random seed");
  CLI::App* threshold = app.add_subcommand("threshold", "least radius whose bound exceeds n + 1");
  add_points(threshold, true, false);
  threshold->add_option("--tolerance", cfg.tolerance, "bisection width");
  CLI::App* cover = app.add_subcommand("cover", "upper bounds in log form");
  add_points(cover, true, true);
  cover->add_option("--c", cfg.c, "covering constant");
  cover->add_option("--restarts", cfg.restarts, "restarts for the partition diameter");
  cover->add_option("--seed", cfg.seed, "random seed");
  CLI::App* partition = app.add_subcommand("partition", "simplex partition cell diameter");
  add_points(partition, true, false);
  partition->add_option("--restarts", cfg.restarts, "ascent restarts");
  partition->add_option("--seed", cfg.seed, "random seed");
  for (CLI::App* sub : {bound, gamma, verify, optimize, threshold, cover, partition}) add_common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 1;
  }
  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();

  report::Report rep;
  try {
    rep = execute(cfg);
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }

  const report::Format format = cfg.format == "csv"    ? report::Format::Csv
                                : cfg.format == "json" ? report::Format::Json
                                                       : report::Format::Table;
  if (cfg.output.empty()) {
    report::emit(rep, format, out);
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "cannot open output file: " << cfg.output << '\n';
      return 2;
    }
    report::emit(rep, format, file);
  }
  return 0;
}

}  // namespace spherechi::cli
