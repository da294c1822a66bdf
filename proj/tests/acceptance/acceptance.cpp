// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oasbench/experiment.hpp"
#include "oasbench/oracles.hpp"
#include "oasbench/stats.hpp"
#include "oasbench/sweep.hpp"
#include "oasbench/validate.hpp"

using namespace oasbench;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string num(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

std::string ci(const SummaryStats& s) {
  return num(s.mean) + " [" + num(s.ci_low) + ", " + num(s.ci_high) + "]";
}

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

ExperimentConfig make(PolicyKind kind, std::vector<std::size_t> ns, std::uint64_t reps) {
  ExperimentConfig c;
  c.policy = kind;
  c.n_values = std::move(ns);
  c.reps = reps;
  c.master_seed = kSeed;
  return c;
}

SweepResult sweep(const std::vector<ExperimentConfig>& configs) {
  SweepOptions opt;
  opt.workers = workers();
  return run_sweep(configs, opt);
}

// Optimum-row statistics; also reports whether every run reached the optimum.
const SummaryStats& optimum_stats(const JobResult& job, bool& complete) {
  const SummaryRow& row = job.summary.front();
  complete = complete && row.stats.count == row.runs;
  return row.stats;
}

Outcome all_pass(const std::vector<ValidationCheck>& checks) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& c : checks) {
    if (!c.passed) {
      if (failed++ == 0) first = c.name + " (" + c.detail + ")";
    }
  }
  return {failed == 0, std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " cells" +
                           (first.empty() ? "" : "; first failure: " + first)};
}

Outcome a1() {
  const auto start = std::chrono::steady_clock::now();
  ValidationOptions opt;
  opt.master_seed = kSeed;
  Outcome o = all_pass(check_oracle_agreement(opt));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.passed = o.passed && secs < 120.0;
  o.detail += " in " + num(secs, 3) + " s";
  return o;
}

Outcome a2() {
  ValidationOptions opt;
  opt.master_seed = kSeed;
  for (const auto& c : check_trace_audits(opt)) {
    if (c.name == "cost accounting audit") return {c.passed, c.detail};
  }
  return {false, "audit missing"};
}

Outcome a3() {
  ValidationOptions opt;
  opt.master_seed = kSeed;
  const ValidationCheck c = check_lambda_one_equivalence(opt);
  return {c.passed, c.detail};
}

Outcome a4() {
  constexpr PolicyKind kinds[] = {PolicyKind::opo_ea,     PolicyKind::opl_ea,         PolicyKind::ollga,
                                  PolicyKind::oas_oracle, PolicyKind::oas_stagnation, PolicyKind::hh};
  std::vector<std::size_t> ns;
  for (std::size_t n = 256; n <= 16384; n *= 2) ns.push_back(n);
  std::vector<ExperimentConfig> configs;
  for (PolicyKind k : kinds) configs.push_back(make(k, ns, 10));

  std::uint64_t traces = 0;
  std::uint64_t elitism = 0;
  SweepOptions opt;
  opt.workers = workers();
  opt.visitor = [&](const SweepJob&, const RunTrace& t) {
    ++traces;
    Fitness last = t.initial_fitness;
    for (const auto& e : t.events) {
      if (e.fitness < last || e.fitness + e.distance != t.n) {
        ++elitism;
        break;
      }
      last = e.fitness;
    }
  };
  const SweepResult r = run_sweep(configs, opt);
  std::uint64_t malformed = 0;
  for (const auto& job : r.jobs) {
    for (const auto& run : job.runs) malformed += !run.violation.empty();
  }
  return {traces > 0 && elitism == 0 && malformed == 0,
          "traces=" + std::to_string(traces) + " elitism_violations=" + std::to_string(elitism) +
              " wellformedness_or_cost_violations=" + std::to_string(malformed)};
}

struct LargeScale {
  SummaryStats ea;
  SummaryStats oas;
  SummaryStats hh;
  std::vector<std::pair<std::size_t, SummaryStats>> ga;
  bool complete = true;
};

LargeScale large_scale() {
  constexpr std::size_t n = 65536;
  constexpr std::uint64_t reps = 50;
  std::vector<ExperimentConfig> configs{make(PolicyKind::opo_ea, {n}, reps),
                                        make(PolicyKind::oas_stagnation, {n}, reps),
                                        make(PolicyKind::hh, {n}, reps)};
  const std::vector<std::size_t> grid{2, 4, 6, 8, 12, 16};
  for (std::size_t lambda : grid) {
    ExperimentConfig c = make(PolicyKind::ollga, {n}, reps);
    c.overrides.lambda2 = lambda;
    configs.push_back(c);
  }
  const SweepResult r = sweep(configs);
  LargeScale out;
  out.ea = optimum_stats(r.jobs[0], out.complete);
  out.oas = optimum_stats(r.jobs[1], out.complete);
  out.hh = optimum_stats(r.jobs[2], out.complete);
  for (std::size_t i = 0; i < grid.size(); ++i) out.ga.emplace_back(grid[i], optimum_stats(r.jobs[3 + i], out.complete));
  return out;
}

Outcome a5(const LargeScale& s) {
  const auto best = std::min_element(s.ga.begin(), s.ga.end(),
                                     [](const auto& a, const auto& b) { return a.second.mean < b.second.mean; });
  const bool beats_ea = s.oas.mean < s.ea.mean && disjoint(s.oas, s.ea);
  const bool beats_ga = s.oas.mean < best->second.mean;
  return {s.complete && beats_ea && beats_ga, "oas-stagnation " + ci(s.oas) + " vs (1+1) EA " + ci(s.ea) +
                                                  "; best static GA lambda=" + std::to_string(best->first) + " " +
                                                  ci(best->second)};
}

Outcome a6() {
  ValidationOptions opt;
  opt.master_seed = kSeed;
  const ValidationCheck c = check_early_switch_rarity(opt);
  return {c.passed, c.detail};
}

Outcome a7() {
  const std::vector<std::size_t> ns{1024, 4096, 16384};
  const SweepResult r = sweep({make(PolicyKind::opo_ea, ns, 100), make(PolicyKind::oas_stagnation, ns, 100)});
  bool complete = true;
  bool ok = true;
  std::string detail = "ea T/(n ln n):";
  double prev_ratio = 0.0;
  double prev_scale = 1.0;
  SummaryStats prev{};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double scale = static_cast<double>(ns[i]) * std::log(static_cast<double>(ns[i]));
    const SummaryStats& s = optimum_stats(r.jobs[i], complete);
    const double ratio = s.mean / scale;
    detail += " " + num(ratio, 4) + " [" + num(s.ci_low / scale, 4) + ", " + num(s.ci_high / scale, 4) + "]";
    ok = ok && ratio >= 1.0 && ratio <= 4.0;
    // CIs are compared on the ratio scale
    if (i > 0 && ratio > prev_ratio && s.ci_low / scale > prev.ci_high / prev_scale) {
      ok = false;
      detail += " (rises beyond CI overlap)";
    }
    prev_scale = scale;
    prev_ratio = ratio;
    prev = s;
  }
  detail += "; oas T/(n ln ln n):";
  double lo = 1e300;
  double hi = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double nd = static_cast<double>(ns[i]);
    const double ratio = optimum_stats(r.jobs[ns.size() + i], complete).mean / (nd * std::log(std::log(nd)));
    detail += " " + num(ratio, 4);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  ok = ok && hi <= 2.0 * lo;
  return {complete && ok, detail + " (spread x" + num(hi / lo, 3) + ")"};
}

Outcome a8(const LargeScale& s) {
  const bool beats_ea = s.hh.mean < s.ea.mean && disjoint(s.hh, s.ea);
  const double factor = s.hh.mean / s.oas.mean;
  const bool close = factor <= 2.0 && factor >= 0.5;
  return {s.complete && beats_ea && close,
          "hh " + ci(s.hh) + " vs (1+1) EA " + ci(s.ea) + "; hh/oas-stagnation = " + num(factor, 4)};
}

Outcome a9() {
  constexpr std::size_t n = 16384;
  std::vector<ExperimentConfig> configs;
  std::vector<double> bounds;
  std::vector<std::size_t> lambdas;
  for (std::size_t d : {16, 64, 256}) {
    const std::size_t lambda = static_cast<std::size_t>(std::llround(optimal_fixed_start_lambda(n, d)));
    ExperimentConfig c = make(PolicyKind::ollga, {n}, 100);
    c.overrides.lambda2 = lambda;
    c.start_distance = d;
    configs.push_back(c);
    bounds.push_back(bound_ollga_fixed_start(n, d, lambda).value);
    lambdas.push_back(lambda);
  }
  const SweepResult r = sweep(configs);
  bool complete = true;
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const double mean = optimum_stats(r.jobs[i], complete).mean;
    ok = ok && mean <= 10.0 * bounds[i];
    detail += (i ? "; " : "") + std::string("D=") + std::to_string(*configs[i].start_distance) +
              " lambda=" + std::to_string(lambdas[i]) + " mean/bound=" + num(mean / bounds[i], 4);
  }
  return {complete && ok, detail};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* id, const char* title, const Outcome& o) {
    std::cout << (o.passed ? "PASS " : "FAIL ") << id << " " << title << ": " << o.detail << std::endl;
    failures += !o.passed;
  };

  report("A1", "oracle agreement", a1());
  report("A2", "exact cost accounting", a2());
  report("A3", "lambda=1 GA/EA equivalence", a3());
  report("A4", "elitism and trace well-formedness", a4());
  const LargeScale large = large_scale();
  report("A5", "OAS beats the portfolio at n=65536", a5(large));
  report("A6", "early-switch rarity", a6());
  report("A7", "scaling sanity", a7());
  report("A8", "hyper-heuristic effectiveness", a8(large));
  report("A9", "fixed-start GA within 10x of the bound", a9());

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
