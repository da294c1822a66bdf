#include "oasbench/trace.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace oasbench {

namespace {

constexpr std::array<std::pair<EventType, std::string_view>, 4> kEventNames{{
    {EventType::improvement, "improvement"},
    {EventType::switch_algorithm, "switch"},
    {EventType::optimum, "optimum"},
    {EventType::budget_exhausted, "budget_exhausted"},
}};

constexpr std::array<std::pair<PolicyKind, std::string_view>, 6> kPolicyNames{{
    {PolicyKind::opo_ea, "opo-ea"},
    {PolicyKind::opl_ea, "opl-ea"},
    {PolicyKind::ollga, "ollga"},
    {PolicyKind::oas_oracle, "oas-oracle"},
    {PolicyKind::oas_stagnation, "oas-stagnation"},
    {PolicyKind::hh, "hh"},
}};

}  // namespace

std::string_view to_string(EventType type) {
  for (const auto& [t, name] : kEventNames) {
    if (t == type) return name;
  }
  return "unknown";
}

std::optional<EventType> parse_event_type(std::string_view text) {
  for (const auto& [t, name] : kEventNames) {
    if (name == text) return t;
  }
  return std::nullopt;
}

std::string_view to_string(PolicyKind kind) {
  for (const auto& [k, name] : kPolicyNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<PolicyKind> parse_policy_kind(std::string_view text) {
  for (const auto& [k, name] : kPolicyNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

Evaluations RunTrace::total_evaluations() const {
  return events.empty() ? 0 : events.back().evaluations;
}

bool RunTrace::reached_optimum() const {
  return !events.empty() && events.back().type == EventType::optimum;
}

std::optional<TraceEvent> RunTrace::switch_event() const {
  for (const auto& e : events) {
    if (e.type == EventType::switch_algorithm) return e;
  }
  return std::nullopt;
}

std::string check_well_formed(const RunTrace& trace) {
  std::ostringstream err;
  int switches = 0;
  int terminals = 0;
  std::optional<TraceEvent> last_improvement;
  Fitness best = trace.initial_fitness;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const TraceEvent& e = trace.events[i];
    if (i > 0 && e.evaluations < trace.events[i - 1].evaluations) {
      err << "event " << i << ": evaluations decrease";
      return err.str();
    }
    if (terminals > 0) {
      err << "event " << i << ": event after terminal event";
      return err.str();
    }
    if (e.fitness > trace.n || e.distance != trace.n - e.fitness) {
      err << "event " << i << ": fitness/distance inconsistent with n";
      return err.str();
    }
    if (e.fitness < best) {
      err << "event " << i << ": fitness decreased (elitism violated)";
      return err.str();
    }
    best = e.fitness;
    switch (e.type) {
      case EventType::improvement:
        if (last_improvement && e.evaluations <= last_improvement->evaluations) {
          err << "event " << i << ": improvement evaluations not strictly increasing";
          return err.str();
        }
        if (last_improvement ? e.fitness <= last_improvement->fitness : e.fitness <= trace.initial_fitness) {
          err << "event " << i << ": improvement without fitness gain";
          return err.str();
        }
        last_improvement = e;
        break;
      case EventType::switch_algorithm:
        if (++switches > 1) {
          err << "event " << i << ": more than one switch event";
          return err.str();
        }
        break;
      case EventType::optimum:
        if (e.fitness != trace.n) {
          err << "event " << i << ": optimum event below n";
          return err.str();
        }
        [[fallthrough]];
      case EventType::budget_exhausted:
        ++terminals;
        if (last_improvement && e.evaluations <= last_improvement->evaluations && e.type == EventType::optimum) {
          err << "event " << i << ": optimum not after last improvement";
          return err.str();
        }
        break;
    }
  }
  return {};
}

bool cost_audit(const RunTrace& trace) {
  const Evaluations expected = trace.params.lambda1 * trace.ea_steps + 2 * trace.params.lambda2 * trace.ga_steps;
  return expected == trace.total_evaluations();
}

std::vector<std::optional<Evaluations>> fixed_target_times(const RunTrace& trace,
                                                           const std::vector<Fitness>& targets) {
  std::vector<std::optional<Evaluations>> out;
  out.reserve(targets.size());
  for (Fitness target : targets) {
    std::optional<Evaluations> hit;
    if (target <= trace.initial_fitness) {
      hit = 0;
    } else {
      for (const auto& e : trace.events) {
        if ((e.type == EventType::improvement || e.type == EventType::optimum) && e.fitness >= target) {
          hit = e.evaluations;
          break;
        }
      }
    }
    out.push_back(hit);
  }
  return out;
}

}  // namespace oasbench
