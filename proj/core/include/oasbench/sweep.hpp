#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oasbench/csv.hpp"
#include "oasbench/experiment.hpp"

namespace oasbench {

/// One (config, problem size) cell of a sweep; it runs config.reps times.
struct SweepJob {
  std::size_t config_index = 0;
  std::size_t n = 0;
};

/// What a sweep keeps of each run once its full trace has been streamed out.
struct RunRecord {
  std::uint64_t run_index = 0;
  Evaluations evaluations = 0;
  bool reached_optimum = false;
  Fitness initial_fitness = 0;
  std::uint64_t ea_steps = 0;
  std::uint64_t ga_steps = 0;
  std::optional<TraceEvent> switch_event;
  std::vector<std::optional<Evaluations>> target_times;
  std::string violation;  // empty when the trace is well-formed and passes the cost audit
};

struct JobResult {
  SweepJob job;
  PolicyKind policy = PolicyKind::opo_ea;
  PolicyParams params;
  std::vector<RunRecord> runs;  // ordered by run index
  std::vector<SummaryRow> summary;  // optimum row first, then one per target
};

struct SweepResult {
  std::vector<JobResult> jobs;  // ordered by (config index, n)

  /// Evaluations-to-optimum of the runs that reached it.
  static std::vector<double> optimum_times(const JobResult& job);
};

using TraceVisitor = std::function<void(const SweepJob&, const RunTrace&)>;

struct SweepOptions {
  unsigned workers = 1;
  std::ostream* events_csv = nullptr;  // header + rows, in (config, n, run) order
  TraceVisitor visitor;                // sees every full trace, in the same order
  std::size_t bootstrap_resamples = kBootstrapResamples;
};

/// Runs every config over its problem sizes and replications. Results are
/// assembled in (config index, n, run index) order whatever the worker
/// count, so output does not depend on the degree of parallelism. A run
/// that throws aborts the sweep with std::runtime_error naming
/// (config, n, run_index).
SweepResult run_sweep(const std::vector<ExperimentConfig>& configs, const SweepOptions& options);

void write_summary_csv(std::ostream& out, const SweepResult& result);

struct SweepFile {
  std::vector<ExperimentConfig> configs;
  std::optional<unsigned> workers;
  std::string out;
};

/// Parses a JSON sweep description:
///   { "master_seed": 1, "reps": 10, "budget": ..., "workers": 2, "out": "...",
///     "experiments": [ { "algo": "oas-stagnation", "n": [1024, 4096],
///                        "lambda1": 1, "lambda2": 8, "k": 120,
///                        "switch_distance": 300, "start_distance": 64,
///                        "targets": [900, 1000], "reps": 5, ... } ] }
/// Per-experiment keys override the top-level ones. Throws ConfigError.
SweepFile parse_sweep_config(std::string_view json_text);
SweepFile load_sweep_config(const std::string& path);

}  // namespace oasbench
