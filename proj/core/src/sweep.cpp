#include "oasbench/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace oasbench {

namespace {

struct Task {
  std::size_t job;
  std::uint64_t run_index;
};

RunRecord make_record(const RunTrace& trace, const ExperimentConfig& config) {
  RunRecord r;
  r.run_index = trace.run_id;
  r.evaluations = trace.total_evaluations();
  r.reached_optimum = trace.reached_optimum();
  r.initial_fitness = trace.initial_fitness;
  r.ea_steps = trace.ea_steps;
  r.ga_steps = trace.ga_steps;
  r.switch_event = trace.switch_event();
  r.target_times = fixed_target_times(trace, config.targets);
  r.violation = check_well_formed(trace);
  if (r.violation.empty() && !cost_audit(trace)) r.violation = "cost audit failed";
  return r;
}

std::vector<SummaryRow> summarize_job(const JobResult& job, const ExperimentConfig& config, std::size_t resamples) {
  std::vector<SummaryRow> rows;
  const TraceParams reported = reported_params(job.policy, job.params);
  const RandomStream base(config.master_seed, 0);
  auto make_row = [&](std::optional<Fitness> target, const std::vector<double>& values, std::uint64_t salt) {
    SummaryRow row;
    row.algo = job.policy;
    row.n = job.job.n;
    row.params = reported;
    row.start_distance = config.start_distance;
    row.target = target;
    row.runs = job.runs.size();
    row.stats = summarize(values, base.derive(salt), resamples);
    return row;
  };
  const std::uint64_t job_salt = (static_cast<std::uint64_t>(job.job.config_index) << 32) ^ job.job.n;
  rows.push_back(make_row(std::nullopt, SweepResult::optimum_times(job), job_salt * 1315423911ULL + 1));
  for (std::size_t t = 0; t < config.targets.size(); ++t) {
    std::vector<double> values;
    for (const auto& r : job.runs) {
      if (r.target_times[t]) values.push_back(static_cast<double>(*r.target_times[t]));
    }
    rows.push_back(make_row(config.targets[t], values, job_salt * 1315423911ULL + 2 + t));
  }
  return rows;
}

std::string describe(const ExperimentConfig& config, std::size_t config_index, std::size_t n,
                     std::uint64_t run_index) {
  std::ostringstream s;
  s << "config " << config_index << " (" << to_string(config.policy) << ", n=" << n << "), run_index " << run_index;
  return s.str();
}

}  // namespace

std::vector<double> SweepResult::optimum_times(const JobResult& job) {
  std::vector<double> out;
  for (const auto& r : job.runs) {
    if (r.reached_optimum) out.push_back(static_cast<double>(r.evaluations));
  }
  return out;
}

SweepResult run_sweep(const std::vector<ExperimentConfig>& configs, const SweepOptions& options) {
  if (configs.empty()) throw ConfigError("sweep: no experiments configured");
  for (const auto& c : configs) validate_config(c);

  SweepResult result;
  std::vector<Task> tasks;
  for (std::size_t ci = 0; ci < configs.size(); ++ci) {
    for (std::size_t n : configs[ci].n_values) {
      JobResult job;
      job.job = {ci, n};
      job.policy = configs[ci].policy;
      job.params = resolve_params(configs[ci], n);
      job.runs.reserve(configs[ci].reps);
      for (std::uint64_t r = 0; r < configs[ci].reps; ++r) tasks.push_back({result.jobs.size(), r});
      result.jobs.push_back(std::move(job));
    }
  }

  if (options.events_csv) write_trace_header(*options.events_csv);

  const unsigned workers = std::max(1U, options.workers);
  const std::size_t chunk = std::max<std::size_t>(64, std::size_t{workers} * 8);
  std::vector<std::optional<RunTrace>> slots;

  for (std::size_t begin = 0; begin < tasks.size(); begin += chunk) {
    const std::size_t end = std::min(tasks.size(), begin + chunk);
    slots.assign(end - begin, std::nullopt);
    std::atomic<std::size_t> next{begin};
    std::mutex error_mutex;
    std::optional<std::pair<std::size_t, std::string>> failure;  // task index, message

    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= end) return;
        const Task& task = tasks[i];
        const JobResult& job = result.jobs[task.job];
        try {
          slots[i - begin] = run_one(configs[job.job.config_index], job.job.n, task.run_index);
        } catch (const std::exception& e) {
          std::lock_guard lock(error_mutex);
          if (!failure || i < failure->first) failure = {{i, e.what()}};
        }
      }
    };

    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    if (failure) {
      const Task& task = tasks[failure->first];
      const JobResult& job = result.jobs[task.job];
      throw std::runtime_error("sweep aborted: " +
                               describe(configs[job.job.config_index], job.job.config_index, job.job.n,
                                        task.run_index) +
                               ": " + failure->second);
    }

    for (std::size_t i = begin; i < end; ++i) {
      JobResult& job = result.jobs[tasks[i].job];
      const RunTrace& trace = *slots[i - begin];
      try {
        if (options.visitor) options.visitor(job.job, trace);
      } catch (const std::exception& e) {
        throw std::runtime_error("sweep aborted: " +
                                 describe(configs[job.job.config_index], job.job.config_index, job.job.n,
                                          tasks[i].run_index) +
                                 ": " + e.what());
      }
      if (options.events_csv) write_trace_rows(*options.events_csv, trace);
      job.runs.push_back(make_record(trace, configs[job.job.config_index]));
    }
  }

  for (auto& job : result.jobs) {
    job.summary = summarize_job(job, configs[job.job.config_index], options.bootstrap_resamples);
  }
  return result;
}

void write_summary_csv(std::ostream& out, const SweepResult& result) {
  write_summary_header(out);
  for (const auto& job : result.jobs) {
    for (const auto& row : job.summary) write_summary_row(out, row);
  }
}

namespace {

using nlohmann::json;

template <typename T>
std::optional<T> optional_field(const json& obj, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return obj.at(key).get<T>();
}

ExperimentConfig parse_experiment(const json& e, const json& defaults) {
  auto pick = [&](const char* key) -> const json* {
    if (e.contains(key)) return &e.at(key);
    if (defaults.contains(key)) return &defaults.at(key);
    return nullptr;
  };

  ExperimentConfig c;
  const json* algo = pick("algo");
  if (!algo) throw ConfigError("algo: missing");
  const auto kind = parse_policy_kind(algo->get<std::string>());
  if (!kind) throw ConfigError("algo: unknown value '" + algo->get<std::string>() + "'");
  c.policy = *kind;

  const json* n = pick("n");
  if (!n) throw ConfigError("n: missing");
  if (n->is_array()) {
    c.n_values = n->get<std::vector<std::size_t>>();
  } else {
    c.n_values = {n->get<std::size_t>()};
  }
  if (const json* v = pick("reps")) c.reps = v->get<std::uint64_t>();
  if (const json* v = pick("master_seed")) c.master_seed = v->get<std::uint64_t>();
  if (const json* v = pick("budget")) c.budget = v->get<Evaluations>();
  if (const json* v = pick("lambda1")) c.overrides.lambda1 = v->get<std::size_t>();
  if (const json* v = pick("lambda2")) c.overrides.lambda2 = v->get<std::size_t>();
  if (const json* v = pick("k")) c.overrides.k = v->get<std::uint64_t>();
  if (const json* v = pick("switch_distance")) c.overrides.switch_distance = v->get<std::size_t>();
  if (const json* v = pick("start_distance")) c.start_distance = v->get<std::size_t>();
  if (const json* v = pick("targets")) c.targets = v->get<std::vector<Fitness>>();
  return c;
}

}  // namespace

SweepFile parse_sweep_config(std::string_view json_text) {
  SweepFile file;
  try {
    const json root = json::parse(json_text);
    if (!root.is_object()) throw ConfigError("sweep config: top level must be an object");
    if (!root.contains("experiments") || !root.at("experiments").is_array() || root.at("experiments").empty()) {
      throw ConfigError("experiments: a non-empty list is required");
    }
    json defaults = root;
    defaults.erase("experiments");
    for (const auto& e : root.at("experiments")) file.configs.push_back(parse_experiment(e, defaults));
    file.workers = optional_field<unsigned>(root, "workers");
    if (auto out = optional_field<std::string>(root, "out")) file.out = *out;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("sweep config: ") + e.what());
  }
  for (std::size_t i = 0; i < file.configs.size(); ++i) {
    file.configs[i].out = file.out;
    try {
      validate_config(file.configs[i]);
    } catch (const ConfigError& e) {
      throw ConfigError("experiments[" + std::to_string(i) + "]." + e.what());
    }
  }
  return file;
}

SweepFile load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sweep_config(text.str());
}

}  // namespace oasbench
