#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oasbench/experiment.hpp"
#include "oasbench/oracles.hpp"
#include "oasbench/policies.hpp"
#include "oasbench/sweep.hpp"
#include "oasbench/validate.hpp"

namespace oasbench::cli {

namespace {

std::string summary_path(const std::string& events_path) { return events_path + ".summary.csv"; }

void print_summary(std::ostream& out, const SweepResult& result) {
  out << std::left << std::setw(16) << "algo" << std::setw(8) << "n" << std::setw(10) << "target" << std::setw(8)
      << "count" << std::setw(14) << "mean" << std::setw(14) << "sd" << "95% CI\n";
  out << std::fixed << std::setprecision(1);
  for (const auto& job : result.jobs) {
    for (const auto& row : job.summary) {
      out << std::left << std::setw(16) << to_string(row.algo) << std::setw(8) << row.n << std::setw(10)
          << (row.target ? std::to_string(*row.target) : std::string("optimum")) << std::setw(8)
          << (std::to_string(row.stats.count) + "/" + std::to_string(row.runs)) << std::setw(14) << row.stats.mean
          << std::setw(14) << row.stats.sd << "[" << row.stats.ci_low << ", " << row.stats.ci_high << "]\n";
    }
  }
  out.unsetf(std::ios::fixed);
  out << std::setprecision(6);
}

int execute_sweep(const std::vector<ExperimentConfig>& configs, unsigned workers, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  std::ofstream events(out_path, std::ios::binary);
  if (!events) {
    err << "error: cannot open output file '" << out_path << "'\n";
    return kExitInvalidConfig;
  }
  SweepOptions options;
  options.workers = workers;
  options.events_csv = &events;
  const SweepResult result = run_sweep(configs, options);

  std::ofstream summary(summary_path(out_path), std::ios::binary);
  write_summary_csv(summary, result);

  std::size_t violations = 0;
  for (const auto& job : result.jobs) {
    for (const auto& r : job.runs) {
      if (!r.violation.empty()) {
        if (violations == 0) err << "trace violation (run " << r.run_index << "): " << r.violation << '\n';
        ++violations;
      }
    }
  }
  print_summary(out, result);
  out << "events: " << out_path << "\nsummary: " << summary_path(out_path) << '\n';
  return violations == 0 ? kExitOk : kExitValidationFailed;
}

std::vector<Fitness> parse_targets(const std::string& text) {
  std::vector<Fitness> targets;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &pos);
    } catch (const std::exception&) {
      throw ConfigError("targets: '" + item + "' is not a non-negative integer");
    }
    if (pos != item.size()) throw ConfigError("targets: '" + item + "' is not a non-negative integer");
    targets.push_back(static_cast<Fitness>(value));
  }
  return targets;
}

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

void print_bounds(std::ostream& out, std::size_t n, std::optional<std::size_t> d_opt, std::optional<std::size_t> lambda_opt) {
  const PolicyParams p = default_params(n);
  const std::size_t d = d_opt.value_or(p.switch_distance);
  const std::size_t lambda = lambda_opt.value_or(p.lambda2);
  if (d > n) throw ConfigError("d: exceeds problem size");
  if (lambda < 1 || lambda > n) throw ConfigError("lambda: must lie in [1, n]");

  const double nd = static_cast<double>(n);
  out << std::setprecision(10);
  out << "n = " << n << "\n";
  out << "default lambda1 = " << p.lambda1 << "\n";
  out << "default lambda2 = " << p.lambda2 << "\n";
  out << "default k = " << p.k << "\n";
  out << "default switch distance = " << p.switch_distance << "\n";
  out << "guard distance (2e n ln n / k) = " << p.guard_distance << "\n";
  out << "band distance (n / ln^2 n) = " << p.band_distance << "\n";
  out << "default budget = " << default_budget(n) << "\n";
  out << "\nD = " << d << ", lambda = " << lambda << "\n";
  out << "window check (D, lambda): " << (corollary_window_check(n, static_cast<double>(d), static_cast<double>(lambda)) ? "inside" : "outside") << "\n";
  if (d >= 1) {
    out << "ollga fixed-start bound (n/lambda ln D + D lambda) = " << bound_ollga_fixed_start(n, d, lambda).value
        << "\n";
    out << "optimal fixed-start lambda sqrt(n ln D / D) = " << optimal_fixed_start_lambda(n, d) << "\n";
  } else {
    out << "ollga fixed-start bound: undefined for D = 0\n";
  }
  const BoundEstimate ea = bound_olea_fixed_target(n, d, lambda);
  out << "(1+lambda) EA fixed-target bound = " << ea.value << " [" << to_string(ea.regime) << "]\n";
  const BoundEstimate sw = bound_known_switch(n, d, 1, lambda);
  out << "known-switch bound (lambda1 = 1, lambda2 = lambda) = " << sw.value << " [" << to_string(sw.regime)
      << "]\n";
  out << "  ratio to n ln ln n = " << sw.value / (nd * std::log(std::log(nd))) << "\n";
  out << std::setprecision(6);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online algorithm selection benchmark for OneMax"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Replicate one algorithm or policy and write its event CSV");
  std::string algo;
  std::vector<std::size_t> n_values;
  std::optional<std::size_t> lambda1, lambda2, switch_distance, start_distance;
  std::optional<std::uint64_t> k, budget;
  std::uint64_t reps = 1;
  std::uint64_t seed = 0;
  std::string targets_text;
  std::string run_out;
  unsigned run_workers = default_workers();
  run_cmd->add_option("--algo", algo, "opo-ea|opl-ea|ollga|oas-oracle|oas-stagnation|hh")
      ->required()
      ->check(CLI::IsMember({"opo-ea", "opl-ea", "ollga", "oas-oracle", "oas-stagnation", "hh"}));
  run_cmd->add_option("--n", n_values, "Problem size(s)")->required();
  run_cmd->add_option("--lambda1", lambda1, "EA population size");
  run_cmd->add_option("--lambda2", lambda2, "GA population size (hyper-heuristic lambda)");
  run_cmd->add_option("--k", k, "Stagnation threshold in EA iterations");
  run_cmd->add_option("--switch-distance", switch_distance, "Oracle switch distance");
  run_cmd->add_option("--start-distance", start_distance, "Fixed-start distance");
  run_cmd->add_option("--reps", reps, "Replications")->required();
  run_cmd->add_option("--seed", seed, "Master seed")->required();
  run_cmd->add_option("--budget", budget, "Evaluation budget (default 200 n ln n)");
  run_cmd->add_option("--targets", targets_text, "Comma-separated fitness targets");
  run_cmd->add_option("--workers", run_workers, "Worker threads");
  run_cmd->add_option("--out", run_out, "Event CSV path")->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run every experiment of a JSON sweep file");
  std::string config_path;
  std::optional<unsigned> sweep_workers;
  std::string sweep_out;
  sweep_cmd->add_option("--config", config_path, "Sweep description (JSON)")->required();
  sweep_cmd->add_option("--workers", sweep_workers, "Worker threads");
  sweep_cmd->add_option("--out", sweep_out, "Event CSV path (overrides the file)");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Run oracle agreement and invariant audits");
  ValidationOptions vopts;
  validate_cmd->add_option("--grid-max-n", vopts.grid_max_n, "Largest n of the oracle grid");
  validate_cmd->add_option("--trials", vopts.trials, "Trials per oracle cell");
  validate_cmd->add_option("--seed", vopts.master_seed, "Master seed");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Print default parameters and reference bound values");
  std::size_t bounds_n = 0;
  std::optional<std::size_t> bounds_d, bounds_lambda;
  bounds_cmd->add_option("--n", bounds_n, "Problem size")->required();
  bounds_cmd->add_option("--d", bounds_d, "Distance (default: default switch distance)");
  bounds_cmd->add_option("--lambda", bounds_lambda, "Population size (default: default lambda2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    if (*run_cmd) {
      ExperimentConfig config;
      config.policy = *parse_policy_kind(algo);
      config.n_values = n_values;
      config.overrides = {lambda1, lambda2, k, switch_distance};
      config.reps = reps;
      config.master_seed = seed;
      config.budget = budget;
      config.start_distance = start_distance;
      config.targets = parse_targets(targets_text);
      config.out = run_out;
      validate_config(config);
      return execute_sweep({config}, run_workers, run_out, out, err);
    }
    if (*sweep_cmd) {
      SweepFile file = load_sweep_config(config_path);
      const std::string path = sweep_out.empty() ? file.out : sweep_out;
      if (path.empty()) throw ConfigError("out: no output path given (flag or config file)");
      const unsigned workers = sweep_workers.value_or(file.workers.value_or(default_workers()));
      return execute_sweep(file.configs, workers, path, out, err);
    }
    if (*validate_cmd) {
      const auto checks = run_validation(vopts);
      bool ok = true;
      for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        ok = ok && c.passed;
      }
      out << (ok ? "all checks passed\n" : "validation FAILED\n");
      return ok ? kExitOk : kExitValidationFailed;
    }
    if (*bounds_cmd) {
      if (bounds_n < kMinProblemSize) throw ConfigError("n: must be at least 8");
      print_bounds(out, bounds_n, bounds_d, bounds_lambda);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {  // includes ConfigError
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return kExitInvalidConfig;
}

}  // namespace oasbench::cli
