// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks_cli/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tonks/cluster.hpp"
#include "tonks/errors.hpp"
#include "tonks/exact_eval.hpp"
#include "tonks/inverse_maps.hpp"
#include "tonks/rational.hpp"
#include "tonks/shearer.hpp"
#include "tonks/tree_series.hpp"
#include "tonks/verification.hpp"
#include "tonks_cli/table.hpp"

namespace tonks::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 42;
constexpr const char* kSeedEnv = "TONKS_SEED";

/// Raised for arguments that parse but do not fit the subcommand.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandConfig {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint32_t N = 7;
  std::string rho;
  std::string t;
  std::string s;
  std::string tol;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t replicates = 100'000;
  unsigned workers = 1;
  std::string format = "csv";
  std::string out_path;

  bool continuous = false;
  bool coefficients = false;
  std::string t_grid;
  std::string what = "intensity";
  std::string region;
  std::string region2;
  std::string config_json;
  std::size_t root = 0;
};

// Which flags the user actually passed to the active subcommand.
struct Given {
  const CLI::App* app = nullptr;
  bool operator()(const std::string& flag) const { return app->count(flag) > 0; }
};

Rational require_rational(const Given& given, const std::string& flag, const std::string& text) {
  if (!given(flag)) throw UsageError(flag + " is required");
  return parse_rational(text);
}

double as_double(const Rational& r) { return to_double(r); }

std::pair<Rational, Rational> parse_range(const std::string& text, const std::string& flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(flag + " expects lo:hi");
  return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
}

// ---- roots ----------------------------------------------------------------

Table cmd_roots(const CommandConfig& cfg, const Given& given) {
  const Rational tol = given("--tol") ? parse_rational(cfg.tol) : exact::default_root_tolerance();
  Table table;
  if (cfg.continuous) {
    std::vector<Rational> ts;
    if (given("--t-grid")) {
      const auto first = cfg.t_grid.find(':');
      const auto second = cfg.t_grid.find(':', first == std::string::npos ? first : first + 1);
      if (first == std::string::npos || second == std::string::npos) {
        throw UsageError("--t-grid expects start:stop:step");
      }
      const Rational start = parse_rational(cfg.t_grid.substr(0, first));
      const Rational stop = parse_rational(cfg.t_grid.substr(first + 1, second - first - 1));
      const Rational step = parse_rational(cfg.t_grid.substr(second + 1));
      if (sgn(step) <= 0) throw UsageError("--t-grid step must be positive");
      for (Rational t = start; t <= stop; t += step) ts.push_back(t);
    } else {
      ts.push_back(require_rational(given, "--t", cfg.t));
    }
    table.columns = {"t", "root", "root_lo", "root_hi"};
    for (const auto& t : ts) {
      const auto b = exact::continuous_smallest_root(t, tol);
      table.add_row({as_double(t), as_double(b.midpoint()), as_double(b.lo), as_double(b.hi)});
    }
    return table;
  }
  if (!given("--k") || !given("--n")) throw UsageError("discrete roots need --k and --n (or --continuous)");
  table.columns = {"k", "n", "root", "root_lo", "root_hi"};
  for (std::uint32_t n = 1; n <= cfg.n; ++n) {
    const auto b = exact::discrete_smallest_root(cfg.k, n, tol);
    table.add_row({std::int64_t{cfg.k}, std::int64_t{n}, as_double(b.midpoint()), as_double(b.lo), as_double(b.hi)});
  }
  return table;
}

// ---- partition ------------------------------------------------------------

Table coefficient_table(const Polynomial& p) {
  Table table;
  table.columns = {"power", "coefficient"};
  for (int m = 0; m <= p.degree(); ++m) table.add_row({std::int64_t{m}, to_string(p.coefficient(m))});
  return table;
}

Table cmd_partition(const CommandConfig& cfg, const Given& given) {
  Table table;
  if (cfg.continuous) {
    const Rational t = require_rational(given, "--t", cfg.t);
    if (cfg.coefficients) return coefficient_table(exact::continuous_partition_polynomial_in_rho(t));
    const Rational rho = require_rational(given, "--rho", cfg.rho);
    const Rational z = exact::continuous_partition_eval(rho, t);
    table.columns = {"t", "s", "rho", "z", "z_float", "cond", "cond_float"};
    Cell s_cell, cond, cond_float;
    if (given("--s")) {
      const Rational s = parse_rational(cfg.s);
      const Rational c = exact::continuous_cond_ratio(rho, s, t);
      s_cell = to_string(s);
      cond = to_string(c);
      cond_float = as_double(c);
    }
    table.add_row({to_string(t), s_cell, to_string(rho), to_string(z), as_double(z), cond, cond_float});
    return table;
  }
  if (!given("--k") || !given("--n")) throw UsageError("discrete partition needs --k and --n (or --continuous)");
  if (cfg.coefficients) return coefficient_table(exact::discrete_partition_polynomial(cfg.k, cfg.n));
  const Rational rho = require_rational(given, "--rho", cfg.rho);
  const Rational z = exact::discrete_partition_eval(cfg.k, cfg.n, rho);
  table.columns = {"k", "n", "rho", "z", "z_float", "cond", "cond_float"};
  Cell cond, cond_float;
  try {
    const Rational c = exact::discrete_cond_ratio(cfg.k, cfg.n, rho);
    cond = to_string(c);
    cond_float = as_double(c);
  } catch (const ZeroDenominatorError&) {
    // Z(-rho, n-1) = 0: the ratio is undefined, leave the cells empty.
  }
  table.add_row({std::int64_t{cfg.k}, std::int64_t{cfg.n}, to_string(rho), to_string(z), as_double(z), cond,
                 cond_float});
  return table;
}

// ---- inverse --------------------------------------------------------------

Table cmd_inverse(const CommandConfig& cfg, const Given& given) {
  const double rho = as_double(require_rational(given, "--rho", cfg.rho));
  const double tol = given("--tol") ? as_double(parse_rational(cfg.tol)) : inverse::kDefaultTolerance;
  Table table;
  table.columns = {"map", "k", "rho", "value", "residual"};
  if (given("--k")) {
    const auto r = inverse::inv_k(cfg.k, rho, tol);
    table.add_row({std::string("InvK"), std::int64_t{cfg.k}, rho, r.value, r.residual});
  } else {
    const auto r = inverse::inv_c(rho, tol);
    table.add_row({std::string("InvC"), std::monostate{}, rho, r.value, r.residual});
  }
  return table;
}

// ---- free-energy ----------------------------------------------------------

Table cmd_free_energy(const CommandConfig& cfg, const Given& given) {
  const Rational rho_exact = require_rational(given, "--rho", cfg.rho);
  const double rho = as_double(rho_exact);
  Table table;
  table.columns = {"model", "k", "size", "quantity", "value"};
  if (given("--k")) {
    const Cell k = std::int64_t{cfg.k};
    table.add_row({std::string("discrete"), k, std::monostate{}, std::string("formula"),
                   inverse::free_energy_discrete(cfg.k, rho)});
    table.add_row({std::string("discrete"), k, std::monostate{}, std::string("cond_limit"),
                   inverse::cond_limit_discrete(cfg.k, rho)});
    if (given("--n")) {
      table.add_row({std::string("discrete"), k, to_string(Rational(cfg.n)), std::string("exact_density"),
                     exact::free_energy_density(exact::DiscreteModel{cfg.k, cfg.n}, rho_exact)});
    }
    return table;
  }
  const auto candidates = inverse::free_energy_continuous_candidates(rho);
  table.add_row({std::string("continuous"), std::monostate{}, std::monostate{}, std::string("printed_formula"),
                 candidates.printed_formula});
  table.add_row({std::string("continuous"), std::monostate{}, std::monostate{}, std::string("telescoped_limit"),
                 candidates.telescoped_limit});
  if (given("--t")) {
    const Rational t = parse_rational(cfg.t);
    table.add_row({std::string("continuous"), std::monostate{}, to_string(t), std::string("exact_density"),
                   exact::free_energy_density(exact::ContinuousModel{t}, rho_exact)});
  }
  return table;
}

// ---- scaling / bounds -----------------------------------------------------

Table cmd_scaling(const CommandConfig& cfg, const Given& given) {
  const double rho = given("--rho") ? as_double(parse_rational(cfg.rho)) : 0.3;
  std::vector<std::uint32_t> ks = {1, 2, 3, 5, 10, 20, 50, 100, 1000, 10000};
  if (given("--k")) ks = {cfg.k};
  const double inv_c = inverse::inv_c(rho).value;
  Table table;
  table.columns = {"k", "scaled_singularity", "singularity_gap", "scaled_inverse", "inverse_gap"};
  for (const auto& row : inverse::scaling_table(ks, rho)) {
    table.add_row({std::int64_t{row.k}, row.scaled_singularity, row.scaled_singularity - std::exp(-1.0),
                   row.scaled_inverse, row.scaled_inverse - inv_c});
  }
  return table;
}

Table cmd_bounds(const CommandConfig& cfg, const Given& given) {
  const std::uint32_t max_k = given("--k") ? cfg.k : 10;
  Table table;
  table.columns = {"case", "bound", "value", "singularity"};
  for (std::uint32_t k = 1; k <= max_k; ++k) {
    const auto b = inverse::prior_bounds(k);
    const double star = inverse::singularity_discrete(k);
    const std::string name = "k=" + std::to_string(k);
    table.add_row({name, std::string("dobrushin"), b.dobrushin, star});
    table.add_row({name, std::string("fp"), b.fernandez_procacci, star});
  }
  const auto c = inverse::prior_bounds_continuous();
  table.add_row({std::string("continuous"), std::string("ruelle"), c.ruelle, inverse::singularity_continuous()});
  table.add_row({std::string("continuous"), std::string("fps"), c.fernandez_procacci_scoppola,
                 inverse::singularity_continuous()});
  return table;
}

// ---- penrose-check --------------------------------------------------------

Table cmd_penrose(const CommandConfig& cfg, const Given& given) {
  Table table;
  if (given("--config")) {
    const auto config = cluster::configuration_from_json(cfg.config_json);
    if (cfg.root >= config.size()) throw UsageError("--root is out of range");
    const auto check = cluster::check_penrose_identity(config, cfg.root);
    table.columns = {"n", "root", "ursell", "singleton_count", "identity_holds"};
    table.add_row({static_cast<std::int64_t>(config.size()), static_cast<std::int64_t>(cfg.root), check.ursell,
                   check.singleton_count, std::string(check.identity_holds ? "true" : "false")});
    return table;
  }
  const std::uint64_t count = given("--replicates") ? cfg.replicates : 200;
  std::uint32_t lo = 2;
  std::uint32_t hi = 7;
  if (given("--n")) lo = hi = cfg.n;
  SplitMix64 rng = replicate_stream(RandomSeed{cfg.seed}, 3);
  table.columns = {"n",        "configurations",         "nonzero_ursell",
                   "failures", "interior_root_failures", "leftmost_root_failures"};
  for (std::uint32_t n = lo; n <= hi; ++n) {
    const auto sweep = cluster::penrose_sweep(n, count, rng);
    auto i64 = [](std::size_t v) { return Cell{static_cast<std::int64_t>(v)}; };
    table.add_row({i64(n), i64(sweep.configurations), i64(sweep.nonzero_ursell), i64(sweep.failures),
                   i64(sweep.interior_root_failures), i64(sweep.leftmost_root_failures)});
  }
  return table;
}

// ---- series ---------------------------------------------------------------

const char* status_name(trees::FixedPointStatus s) {
  switch (s) {
    case trees::FixedPointStatus::kConverged:
      return "converged";
    case trees::FixedPointStatus::kDiverged:
      return "diverged";
    case trees::FixedPointStatus::kIterationCap:
      return "iteration_cap";
  }
  return "unknown";
}

Table cmd_series(const CommandConfig& cfg, const Given& given) {
  const Rational rho_exact = require_rational(given, "--rho", cfg.rho);
  const double rho = as_double(rho_exact);
  const trees::Case c = given("--k") ? trees::Case::discrete(cfg.k) : trees::Case::continuum();
  Table table;
  table.columns = {"quantity", "n", "value", "exact"};
  const Cell none = std::monostate{};
  auto row = [&](const std::string& q, Cell n, Cell value, Cell exact = std::monostate{}) {
    table.add_row({q, std::move(n), std::move(value), std::move(exact)});
  };

  const auto fp = trees::fixed_point_iterate(c, rho);
  row("fixed_point_status", none, std::string(status_name(fp.status)));
  row("fixed_point_mu", none, fp.status == trees::FixedPointStatus::kConverged ? Cell{fp.mu} : none);
  row("fixed_point_iterations", none, static_cast<std::int64_t>(fp.iterations));
  for (std::uint32_t n = 1; n <= cfg.N; ++n) {
    const Rational d = trees::enumerate_D(c, n);
    row("D", std::int64_t{n}, as_double(d), to_string(d));
  }
  row("truncated_P", std::int64_t{cfg.N}, trees::truncated_P(c, rho, cfg.N));
  auto closed = [&](trees::QConvention q) -> Cell {
    try {
      return trees::closed_form_P(c, rho, q);
    } catch (const DomainError&) {
      return std::monostate{};
    }
  };
  row("closed_P_rho_mu", none, closed(trees::QConvention::kRhoMu));
  row("closed_P_mu", none, closed(trees::QConvention::kMu));

  if (c.continuous) {
    const Rational t = given("--t") ? parse_rational(cfg.t) : Rational(200);
    const auto report = trees::series_vs_free_energy_report(rho_exact, t, cfg.N);
    auto flag = [](bool b) { return Cell{std::string(b ? "true" : "false")}; };
    row("inv_c", none, report.inv_c);
    row("exact_density", none, report.exact_density, report.t);
    row("tolerance", none, report.tolerance);
    row("truncated_matches_density", none, flag(report.truncated_matches_density));
    row("closed_rho_mu_matches_density", none, flag(report.closed_rho_mu_matches_density));
    row("closed_mu_matches_density", none, flag(report.closed_mu_matches_density));
    row("inv_c_matches_density", none, flag(report.inv_c_matches_density));
  } else if (given("--n")) {
    // Exploratory: the discrete density next to the discrete series.
    row("exact_density", std::int64_t{cfg.n},
        exact::free_energy_density(exact::DiscreteModel{cfg.k, cfg.n}, rho_exact));
  }
  return table;
}

// ---- simulate -------------------------------------------------------------

Table cmd_simulate(const CommandConfig& cfg, const Given& given) {
  const Rational rho_exact = require_rational(given, "--rho", cfg.rho);
  const double rho = as_double(rho_exact);
  const bool discrete = given("--k");
  shearer::Params params;
  Rational size;
  if (discrete) {
    if (!given("--n")) throw UsageError("discrete simulation needs --n");
    params = shearer::DiscreteParams{cfg.k, rho, cfg.n};
    size = cfg.n;
  } else {
    size = require_rational(given, "--t", cfg.t);
    params = shearer::ContinuousParams{rho, as_double(size)};
  }
  auto region_of = [&](const std::string& text, const std::string& flag) {
    const auto [lo, hi] = parse_range(text, flag);
    return std::pair{lo, hi};
  };
  const RandomSeed seed{cfg.seed};
  shearer::SimulationReport report;
  if (cfg.what == "intensity") {
    report = shearer::estimate_intensity(params, cfg.replicates, seed, cfg.workers);
    report.set_oracle(rho);
  } else if (cfg.what == "avoidance") {
    Rational lo = discrete ? Rational(1) : Rational(0);
    Rational hi = size;
    if (given("--region")) std::tie(lo, hi) = region_of(cfg.region, "--region");
    report = shearer::estimate_avoidance(params, shearer::Region{as_double(lo), as_double(hi)}, cfg.replicates,
                                         seed, cfg.workers);
    Rational oracle;
    if (discrete) {
      const Rational first = -floor_rational(-lo);  // ceil(lo)
      const long sites = Rational(floor_rational(hi) - first + 1).get_num().get_si();
      oracle = exact::discrete_partition_eval(cfg.k, static_cast<std::uint32_t>(std::max(0L, sites)), rho_exact);
    } else {
      oracle = exact::continuous_partition_eval(rho_exact, hi - lo);
    }
    report.set_oracle(as_double(oracle));
  } else if (cfg.what == "dependence") {
    if (!given("--region") || !given("--region2")) throw UsageError("dependence needs --region and --region2");
    const auto [alo, ahi] = region_of(cfg.region, "--region");
    const auto [blo, bhi] = region_of(cfg.region2, "--region2");
    report = shearer::test_r_dependence(params, shearer::Region{as_double(alo), as_double(ahi)},
                                        shearer::Region{as_double(blo), as_double(bhi)}, cfg.replicates, seed,
                                        cfg.workers);
    report.set_oracle(0.0);
  } else {
    throw UsageError("--what must be intensity, avoidance or dependence");
  }
  Table table;
  table.columns = {"quantity", "estimate", "std_error", "replicates", "violations", "oracle", "sigma_distance"};
  auto opt = [](const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; };
  table.add_row({cfg.what, report.estimate, report.std_error, static_cast<std::int64_t>(report.replicates),
                 static_cast<std::int64_t>(report.violations), opt(report.oracle), opt(report.sigma_distance)});
  return table;
}

// ---- verify ---------------------------------------------------------------

Table cmd_verify(const CommandConfig& cfg, bool& all_passed) {
  verification::VerifyOptions options;
  options.seed = RandomSeed{cfg.seed};
  options.replicates = cfg.replicates;
  options.workers = cfg.workers;
  Table table;
  table.columns = {"id", "criterion", "status", "margin", "detail"};
  all_passed = true;
  for (const auto& r : verification::run_all(options)) {
    all_passed = all_passed && r.passed;
    table.add_row({std::int64_t{r.id}, r.name, std::string(r.passed ? "PASS" : "FAIL"), r.margin, r.detail});
  }
  return table;
}

void add_shared_options(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--k", cfg.k, "gap parameter k (hard-core radius k+1)");
  sub->add_option("--n", cfg.n, "block length / number of points");
  sub->add_option("--N", cfg.N, "series truncation order (<= 9)");
  sub->add_option("--rho", cfg.rho, "activity magnitude, \"p/q\" or decimal");
  sub->add_option("--t", cfg.t, "continuous volume, \"p/q\" or decimal");
  sub->add_option("--s", cfg.s, "conditional-ratio increment, \"p/q\" or decimal");
  sub->add_option("--tol", cfg.tol, "tolerance (root bracket width or inverse residual)");
  sub->add_option("--seed", cfg.seed, std::string("master seed (default: $") + kSeedEnv + " or 42)");
  sub->add_option("--replicates", cfg.replicates, "Monte Carlo replicates");
  sub->add_option("--workers", cfg.workers, "worker threads for simulations")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out_path, "write the table here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Exact and Monte Carlo tools for hard-core gases at negative activity", "tonks"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* app;
    std::function<Table(const Given&, bool&)> handler;
  };
  std::vector<Sub> subs;
  auto add = [&](const char* name, const char* help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_shared_options(sub, cfg);
    subs.push_back({sub, std::move(handler)});
    return sub;
  };
  using Handler = Table (*)(const CommandConfig&, const Given&);
  auto plain = [&](Handler h) {
    return [&cfg, h](const Given& g, bool&) { return h(cfg, g); };
  };

  auto* roots = add("roots", "smallest-root brackets vs n (discrete) or t (continuous)", plain(cmd_roots));
  roots->add_flag("--continuous", cfg.continuous, "continuous model");
  roots->add_option("--t-grid", cfg.t_grid, "start:stop:step grid of volumes");
  auto* partition = add("partition", "exact partition function and conditional ratio", plain(cmd_partition));
  partition->add_flag("--continuous", cfg.continuous, "continuous model");
  partition->add_flag("--coefficients", cfg.coefficients, "print the polynomial coefficients instead");
  add("inverse", "InvK (with --k) or InvC", plain(cmd_inverse));
  add("free-energy", "free-energy formulas next to the exact finite-volume density", plain(cmd_free_energy));
  add("scaling", "scaled singularities and inverses against the continuum", plain(cmd_scaling));
  add("bounds", "prior convergence bounds against the singularities", plain(cmd_bounds));
  auto* penrose = add("penrose-check", "Ursell coefficient against the singleton-tree count", plain(cmd_penrose));
  penrose->add_option("--config", cfg.config_json, "JSON array of coordinates for a single check");
  penrose->add_option("--root", cfg.root, "index of the root vertex for --config (default 0)");
  add("series", "tree operator fixed point, D(n), P_N and the free-energy comparison", plain(cmd_series));
  auto* simulate = add("simulate", "Monte Carlo checks of Shearer's point process", plain(cmd_simulate));
  simulate->add_option("--what", cfg.what, "intensity | avoidance | dependence");
  simulate->add_option("--region", cfg.region, "lo:hi region (avoidance, dependence)");
  simulate->add_option("--region2", cfg.region2, "second lo:hi region (dependence)");
  add("verify", "run the acceptance suite", [&cfg](const Given&, bool& passed) { return cmd_verify(cfg, passed); });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    const Given given{sub.app};
    try {
      if (!given("--seed")) {
        if (const char* env = std::getenv(kSeedEnv)) {
          std::size_t used = 0;
          const std::string text = env;
          cfg.seed = std::stoull(text, &used);
          if (used != text.size()) throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
        }
      }
      bool passed = true;
      const Table table = sub.handler(given, passed);
      const std::string text = emit(table, cfg.format == "json" ? Format::kJson : Format::kCsv);
      if (cfg.out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open " + cfg.out_path);
        file << text;
      }
      return passed ? kExitOk : kExitVerificationFailed;
    } catch (const std::exception& e) {
      err << "tonks " << sub.app->get_name() << ": " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace tonks::cli
