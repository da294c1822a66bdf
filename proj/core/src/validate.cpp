#include "oasbench/validate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

#include "oasbench/algorithms.hpp"
#include "oasbench/experiment.hpp"
#include "oasbench/oracles.hpp"
#include "oasbench/policies.hpp"
#include "oasbench/stats.hpp"

namespace oasbench {

namespace {

// Deterministic point at distance d: the first d bits are zero.
BitString point_at_distance(std::size_t n, std::size_t d) {
  BitString x(n, true);
  for (std::size_t i = 0; i < d; ++i) x.set(i, false);
  return x;
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

}  // namespace

std::vector<ValidationCheck> check_oracle_agreement(const ValidationOptions& options) {
  std::vector<ValidationCheck> out;
  std::uint64_t stream = 0;
  for (std::size_t n : {2, 5, 10, 20}) {
    if (n > options.grid_max_n) continue;
    std::vector<std::size_t> distances{1, (n + 1) / 2, n};
    distances.erase(std::unique(distances.begin(), distances.end()), distances.end());
    for (std::size_t d : distances) {
      for (std::size_t lambda : {1, 2, 8}) {
        RandomStream rng(options.master_seed, stream++);
        PlusLambdaEa ea(n, lambda);
        const BitString start = point_at_distance(n, d);
        std::uint64_t improved = 0;
        for (std::uint64_t t = 0; t < options.trials; ++t) {
          SearchState state(start);
          if (ea.step(state, rng).improved) ++improved;
        }
        const double p = lambda == 1 ? p_improve_opo(n, d) : p_level_leave(n, d, lambda);
        const double z = binomial_z(improved, options.trials, p);
        ValidationCheck c;
        c.name = "oracle n=" + std::to_string(n) + " d=" + std::to_string(d) + " lambda=" + std::to_string(lambda);
        c.passed = std::abs(z) <= 3.0;
        c.detail = "exact=" + fmt(p, 10) +
                   " empirical=" + fmt(static_cast<double>(improved) / static_cast<double>(options.trials), 10) +
                   " z=" + fmt(z, 3);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<ValidationCheck> check_trace_audits(const ValidationOptions& options) {
  RandomStream meta(options.master_seed, 0xA0D17ULL);
  constexpr PolicyKind kinds[] = {PolicyKind::opo_ea,     PolicyKind::opl_ea,         PolicyKind::ollga,
                                  PolicyKind::oas_oracle, PolicyKind::oas_stagnation, PolicyKind::hh};
  std::uint64_t cost_failures = 0;
  std::uint64_t elitism_failures = 0;
  std::uint64_t step_cost_failures = 0;
  std::uint64_t malformed = 0;
  std::uint64_t total_ea = 0;
  std::uint64_t total_ga = 0;
  std::string first_problem;

  for (std::uint64_t i = 0; i < options.audit_traces; ++i) {
    const PolicyKind kind = kinds[meta.below(std::size(kinds))];
    const std::size_t n = 8 + static_cast<std::size_t>(meta.below(57));
    PolicyParams params = default_params(n);
    params.lambda1 = 1 + static_cast<std::size_t>(meta.below(4));
    params.lambda2 = 1 + static_cast<std::size_t>(meta.below(std::min<std::size_t>(n, 8)));
    params.k = 1 + meta.below(40);
    params.switch_distance = static_cast<std::size_t>(meta.below(n + 1));

    SelectorOptions sel;
    sel.budget = default_budget(n);
    const std::size_t ea_lambda = kind == PolicyKind::opo_ea || kind == PolicyKind::hh ? 1 : params.lambda1;
    bool elitism_ok = true;
    bool step_cost_ok = true;
    sel.observer = [&](const StepRecord& rec) {
      if (rec.outcome.new_fitness < rec.fitness_before) elitism_ok = false;
      const Evaluations expected = rec.algorithm == AlgorithmTag::ea ? ea_lambda : 2 * params.lambda2;
      if (rec.outcome.cost != expected) step_cost_ok = false;
    };
    RandomStream rng(options.master_seed, 1000000 + i);
    const RunTrace trace = selector_loop(kind, params, n, rng, sel);
    total_ea += trace.ea_steps;
    total_ga += trace.ga_steps;

    if (!cost_audit(trace)) ++cost_failures;
    if (!elitism_ok) ++elitism_failures;
    if (!step_cost_ok) ++step_cost_failures;
    const std::string problem = check_well_formed(trace);
    if (!problem.empty()) {
      ++malformed;
      if (first_problem.empty()) first_problem = std::string(to_string(kind)) + ": " + problem;
    }
  }

  const std::string counts = " traces=" + std::to_string(options.audit_traces) + " ea_steps=" +
                             std::to_string(total_ea) + " ga_steps=" + std::to_string(total_ga);
  return {
      {"cost accounting audit", cost_failures == 0 && step_cost_failures == 0,
       "total_mismatches=" + std::to_string(cost_failures) + " step_mismatches=" + std::to_string(step_cost_failures) +
           counts},
      {"elitism audit", elitism_failures == 0, "violations=" + std::to_string(elitism_failures) + counts},
      {"trace well-formedness", malformed == 0,
       "violations=" + std::to_string(malformed) + (first_problem.empty() ? "" : " first: " + first_problem)},
  };
}

ValidationCheck check_lambda_one_equivalence(const ValidationOptions& options) {
  constexpr std::size_t n = 20;
  constexpr std::size_t d = 10;
  const BitString start = point_at_distance(n, d);
  std::vector<std::uint64_t> ea_gain(d + 1, 0);
  std::vector<std::uint64_t> ga_gain(d + 1, 0);
  bool costs_ok = true;

  RandomStream ea_rng(options.master_seed, 0xE0ULL);
  RandomStream ga_rng(options.master_seed, 0x6AULL);
  PlusLambdaEa ea(n, 1);
  LambdaLambdaGa ga(n, 1);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    SearchState s1(start);
    const StepOutcome o1 = ea.step(s1, ea_rng);
    ++ea_gain[o1.new_fitness - (n - d)];
    SearchState s2(start);
    const StepOutcome o2 = ga.step(s2, ga_rng);
    ++ga_gain[o2.new_fitness - (n - d)];
    if (o1.cost != 1 || o2.cost != 2) costs_ok = false;
  }
  const double p = chi_square_homogeneity_pvalue(ea_gain, ga_gain);
  ValidationCheck c;
  c.name = "lambda=1 GA/EA equivalence";
  c.passed = costs_ok && p > options.equivalence_alpha;
  c.detail = "p_value=" + fmt(p, 4) + " costs=" + (costs_ok ? std::string("2 vs 1") : std::string("MISMATCH")) +
             " P(gain>0) ea=" +
             fmt(1.0 - static_cast<double>(ea_gain[0]) / static_cast<double>(options.trials), 5) + " ga=" +
             fmt(1.0 - static_cast<double>(ga_gain[0]) / static_cast<double>(options.trials), 5);
  return c;
}

ValidationCheck check_early_switch_rarity(const ValidationOptions& options) {
  const std::size_t n = options.rarity_n;
  const PolicyParams params = default_params(n);
  SelectorOptions sel;
  sel.budget = default_budget(n);
  sel.stop_at_switch = true;
  std::uint64_t early = 0;
  std::uint64_t switched = 0;
  for (std::uint64_t r = 0; r < options.rarity_runs; ++r) {
    RandomStream rng(options.master_seed ^ 0x5eedULL, r);
    const RunTrace trace = selector_loop(PolicyKind::oas_stagnation, params, n, rng, sel);
    if (const auto sw = trace.switch_event()) {
      ++switched;
      if (static_cast<double>(sw->distance) > params.guard_distance) ++early;
    }
  }
  const double fraction = static_cast<double>(early) / static_cast<double>(options.rarity_runs);
  ValidationCheck c;
  c.name = "early-switch rarity";
  c.passed = fraction <= options.rarity_ceiling;
  c.detail = "n=" + std::to_string(n) + " k=" + std::to_string(params.k) + " guard=" + fmt(params.guard_distance, 6) +
             " runs=" + std::to_string(options.rarity_runs) + " switched=" + std::to_string(switched) +
             " early=" + std::to_string(early) + " fraction=" + fmt(fraction, 4);
  return c;
}

std::vector<ValidationCheck> run_validation(const ValidationOptions& options) {
  std::vector<ValidationCheck> all = check_oracle_agreement(options);
  for (auto& c : check_trace_audits(options)) all.push_back(std::move(c));
  all.push_back(check_lambda_one_equivalence(options));
  all.push_back(check_early_switch_rarity(options));
  return all;
}

}  // namespace oasbench
