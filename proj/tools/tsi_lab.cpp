// Copyright 2026 The TSI Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: states, statistics sweeps, Husimi grids,
// generation plans, detector-loss fidelities and the reproduction checks.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsi/engineering.hpp"
#include "tsi/errors.hpp"
#include "tsi/fidelity.hpp"
#include "tsi/io.hpp"
#include "tsi/map_orbits.hpp"
#include "tsi/photon_stats.hpp"
#include "tsi/tsi_state.hpp"
#include "tsi/validation.hpp"

namespace {

using namespace tsi;

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kValidationFailed = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string map = "doubling";
  double mu = 0.0;
  std::string seed = "0.3";
  int n = 5;
  std::optional<int> cutoff;
  std::string root_order;
  std::string format;
  std::string output;
  bool polar = false;
  bool no_meta = false;
};

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + text + "'");
  }
  if (used != text.size()) throw UsageError("cannot parse " + what + " '" + text + "'");
  return v;
}

// "0.3" (double), "3/10" (exact rational, doubling only) or "re,im".
MapSpec make_map(const RunConfig& cfg) {
  const auto kind = parse_map_kind(cfg.map);
  if (!kind) throw UsageError("unknown map '" + cfg.map + "'");
  MapSpec spec;
  spec.kind = *kind;
  spec.mu = cfg.mu;
  if (const auto slash = cfg.seed.find('/'); slash != std::string::npos) {
    if (*kind != MapKind::kDoubling) throw UsageError("rational seeds are only supported for the doubling map");
    try {
      spec = MapSpec::doubling_exact(std::stoull(cfg.seed.substr(0, slash)), std::stoull(cfg.seed.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("cannot parse rational seed '" + cfg.seed + "'");
    }
  } else if (const auto comma = cfg.seed.find(','); comma != std::string::npos) {
    spec.seed = Complex{parse_double(cfg.seed.substr(0, comma), "seed"),
                        parse_double(cfg.seed.substr(comma + 1), "seed")};
  } else {
    spec.seed = parse_double(cfg.seed, "seed");
  }
  validate(spec);
  return spec;
}

// "mag@phase,mag@phase,..."
std::optional<std::vector<Complex>> parse_root_order(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto at = item.find('@');
    if (at == std::string::npos) throw UsageError("root order entries must look like mag@phase, got '" + item + "'");
    out.push_back(std::polar(parse_double(item.substr(0, at), "root magnitude"),
                             parse_double(item.substr(at + 1), "root phase")));
  }
  return out;
}

std::optional<int> effective_cutoff(const RunConfig& cfg) {
  if (cfg.cutoff) return cfg.cutoff;
  if (const char* env = std::getenv("TSI_LAB_CUTOFF"); env && *env) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("TSI_LAB_CUTOFF is not an integer: ") + env);
    }
  }
  return std::nullopt;
}

io::OutputOptions output_options(const RunConfig& cfg) { return {cfg.polar, !cfg.no_meta}; }

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.output.empty()) {
    std::cout << content;
  } else {
    io::write_atomic(cfg.output, content);
  }
}

PlanOptions plan_options(const RunConfig& cfg) {
  PlanOptions options;
  options.root_order = parse_root_order(cfg.root_order);
  options.cutoff = effective_cutoff(cfg);
  return options;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "'");
}

int cmd_state(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  check_format(format, {"csv", "json"});
  const FockVector state = build_tsi(make_map(cfg), cfg.n);
  emit(cfg, format == "csv" ? io::state_csv(state, output_options(cfg)) : io::state_json(state, output_options(cfg)));
  return kOk;
}

int cmd_sweep(const RunConfig& cfg) {
  check_format(cfg.format.empty() ? "csv" : cfg.format, {"csv"});
  const std::vector<StatsReport> reports = stats_sweep(make_map(cfg), cfg.n);
  emit(cfg, io::sweep_csv(reports));
  return kOk;
}

int cmd_husimi(const RunConfig& cfg, double window, int resolution) {
  check_format(cfg.format.empty() ? "csv" : cfg.format, {"csv"});
  if (!(window > 0.0)) throw UsageError("--window must be positive");
  const FockVector state = build_tsi(make_map(cfg), cfg.n);
  const HusimiGrid grid = husimi_grid(state, {-window, window}, {-window, window}, resolution);
  emit(cfg, io::husimi_csv(grid));
  std::cerr << "grid integral " << io::format_double(grid.integral()) << "\n";
  return kOk;
}

struct EngineerArgs {
  std::optional<double> transmittance;
  bool optimize = false;
  double t_min = 0.75;
  double t_max = 0.99;
  int t_grid = 64;
};

int cmd_engineer(const RunConfig& cfg, const EngineerArgs& args) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  check_format(format, {"json", "table"});
  const FockVector state = build_tsi(make_map(cfg), cfg.n);
  const PlanOptions options = plan_options(cfg);
  double t = args.transmittance.value_or(0.862);
  if (args.optimize) {
    const TransmittanceOptimum opt =
        optimize_transmittance(state, {args.t_min, args.t_max, args.t_grid, 1e-5}, options);
    if (opt.degenerate) std::cerr << "warning: success probability is flat over the T range\n";
    t = opt.t_star;
  } else if (!args.transmittance) {
    throw UsageError("engineer needs --t or --optimize-t");
  }
  const EngineeringPlan plan = build_plan(state, t, options);
  if (format == "table") {
    emit(cfg, io::plan_table(plan));
  } else {
    emit(cfg, io::plan_json(plan, output_options(cfg)));
    if (!cfg.output.empty()) std::cout << io::plan_table(plan);
  }
  return kOk;
}

int cmd_fidelity(const RunConfig& cfg, double transmittance, const std::vector<double>& etas) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  check_format(format, {"csv", "json"});
  const FockVector state = build_tsi(make_map(cfg), cfg.n);
  const PlanOptions options = plan_options(cfg);
  const EngineeringPlan plan = build_plan(state, transmittance, options);
  const std::vector<FidelityReport> reports = fidelity_sweep(plan, etas, options.cutoff);
  for (const FidelityReport& r : reports) {
    if (r.outside_model_regime) {
      std::cerr << "warning: eta = " << r.eta << " is below the first-order model's 0.9 regime\n";
    }
  }
  emit(cfg, format == "csv" ? io::fidelity_csv(reports) : io::fidelity_json(reports, output_options(cfg)));
  return kOk;
}

int cmd_validate(const RunConfig& cfg, bool list, std::optional<double> inject_t, const std::vector<int>& only) {
  if (list) {
    for (const auto& c : validation::list_criteria()) std::cout << c.id << "  " << c.title << "\n";
    return kOk;
  }
  validation::ValidationOptions options;
  options.transmittance_override = inject_t;
  options.cutoff = effective_cutoff(cfg);
  options.only = only;
  bool all = true;
  for (const auto& r : validation::run_validation(options)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "\n";
    for (const std::string& d : r.details) std::cout << "      " << d << "\n";
    all = all && r.passed;
  }
  return all ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated states obtained by iteration: statistics, generation plans and fidelities"};
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--map", cfg.map, "doubling | logistic | quadratic | sine | exponential")->capture_default_str();
  app.add_option("--mu", cfg.mu, "map parameter")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed: decimal, p/q (exact doubling) or re,im")->capture_default_str();
  app.add_option("--n", cfg.n, "largest Fock index N")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--cutoff", cfg.cutoff, "Fock cutoff for chain simulation (overrides TSI_LAB_CUTOFF)");
  app.add_option("--root-order", cfg.root_order, "betas as mag@phase,... fixing the root order");
  app.add_option("--format", cfg.format, "output format");
  app.add_option("-o,--output", cfg.output, "output file (written atomically); stdout if omitted");
  app.add_flag("--polar", cfg.polar, "complex values as (magnitude, phase)");
  app.add_flag("--no-meta", cfg.no_meta, "omit the timestamped meta block from JSON");

  auto* state = app.add_subcommand("state", "build a TSI and print its amplitudes");
  auto* sweep = app.add_subcommand("sweep", "photon statistics for N = 0..n");

  auto* husimi = app.add_subcommand("husimi", "Husimi Q function on a square grid");
  double window = 6.0;
  int resolution = kDefaultHusimiResolution;
  husimi->add_option("--window", window, "half-width of the square window")->capture_default_str();
  husimi->add_option("--resolution", resolution, "points per axis")->capture_default_str()->check(CLI::Range(2, 2001));

  auto* engineer = app.add_subcommand("engineer", "roots, displacements and success probability");
  EngineerArgs eng;
  engineer->add_option("--t", eng.transmittance, "beam-splitter amplitude transmittance");
  engineer->add_flag("--optimize-t", eng.optimize, "maximize the success probability over T");
  engineer->add_option("--t-min", eng.t_min)->capture_default_str();
  engineer->add_option("--t-max", eng.t_max)->capture_default_str();
  engineer->add_option("--t-grid", eng.t_grid)->capture_default_str();

  auto* fid = app.add_subcommand("fidelity", "generation fidelity under detector inefficiency");
  double fid_t = 0.862;
  std::vector<double> etas{0.99, 0.95, 0.90};
  fid->add_option("--t", fid_t, "beam-splitter amplitude transmittance")->capture_default_str();
  fid->add_option("--eta", etas, "detector efficiencies")->delimiter(',');

  auto* validate_cmd = app.add_subcommand("validate", "run the reproduction checks");
  bool list = false;
  std::optional<double> inject_t;
  std::vector<int> only;
  validate_cmd->add_flag("--list", list, "list the checks without running them");
  validate_cmd->add_option("--inject-t", inject_t, "override every configuration's T (negative testing)");
  validate_cmd->add_option("--only", only, "run only these check ids")->delimiter(',');

  // Usage errors map to exit code 2 rather than CLI11's defaults.
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*state) return cmd_state(cfg);
    if (*sweep) return cmd_sweep(cfg);
    if (*husimi) return cmd_husimi(cfg, window, resolution);
    if (*engineer) return cmd_engineer(cfg, eng);
    if (*fid) return cmd_fidelity(cfg, fid_t, etas);
    if (*validate_cmd) return cmd_validate(cfg, list, inject_t, only);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UndefinedStatistic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NormalizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateDegree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
