#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oasbench/onemax.hpp"

namespace oasbench {

enum class EventType { improvement, switch_algorithm, optimum, budget_exhausted };

std::string_view to_string(EventType type);
std::optional<EventType> parse_event_type(std::string_view text);

struct TraceEvent {
  EventType type;
  Evaluations evaluations;  // cumulative
  Fitness fitness;
  std::size_t distance;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Selectable algorithms and switching policies.
enum class PolicyKind { opo_ea, opl_ea, ollga, oas_oracle, oas_stagnation, hh };

std::string_view to_string(PolicyKind kind);
std::optional<PolicyKind> parse_policy_kind(std::string_view text);

/// Parameters reported with every trace. Unused fields are zero.
struct TraceParams {
  std::size_t lambda1 = 0;
  std::size_t lambda2 = 0;
  std::uint64_t k = 0;
  std::size_t d_switch = 0;

  friend bool operator==(const TraceParams&, const TraceParams&) = default;
};

/// Ordered event log of one run, keyed by cumulative evaluations.
///
/// Well-formed traces satisfy: improvement events have strictly increasing
/// evaluations and fitness; all events are non-decreasing in evaluations;
/// at most one switch event; at most one terminal event (optimum or
/// budget_exhausted), and it is last. The step that hits the optimum is
/// logged as the terminal event only.
struct RunTrace {
  std::uint64_t run_id = 0;
  PolicyKind policy = PolicyKind::opo_ea;
  std::size_t n = 0;
  TraceParams params;
  std::uint64_t seed = 0;
  Fitness initial_fitness = 0;
  std::uint64_t ea_steps = 0;
  std::uint64_t ga_steps = 0;
  std::vector<TraceEvent> events;

  Evaluations total_evaluations() const;
  bool reached_optimum() const;
  /// Switch event, if the policy switched.
  std::optional<TraceEvent> switch_event() const;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

/// Empty string if well-formed, otherwise a description of the first violation.
std::string check_well_formed(const RunTrace& trace);

/// Exact audit: total evaluations == lambda1*ea_steps + 2*lambda2*ga_steps.
bool cost_audit(const RunTrace& trace);

/// First cumulative evaluation count at which fitness >= target, for each
/// target; nullopt where the run never got there. Targets at or below the
/// initial fitness report 0.
std::vector<std::optional<Evaluations>> fixed_target_times(const RunTrace& trace,
                                                           const std::vector<Fitness>& targets);

}  // namespace oasbench
