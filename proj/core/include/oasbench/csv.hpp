#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oasbench/stats.hpp"
#include "oasbench/trace.hpp"

namespace oasbench {

// Event CSV: one row per trace event, LF line endings, no quoting.
inline constexpr std::string_view kTraceCsvHeader =
    "run_id,algo,n,lambda1,lambda2,k,d_switch,seed,event_type,evaluations,fitness,distance";

void write_trace_header(std::ostream& out);
void write_trace_rows(std::ostream& out, const RunTrace& trace);

struct TraceCsvRow {
  std::uint64_t run_id = 0;
  PolicyKind algo = PolicyKind::opo_ea;
  std::size_t n = 0;
  TraceParams params;
  std::uint64_t seed = 0;
  EventType event_type = EventType::improvement;
  Evaluations evaluations = 0;
  Fitness fitness = 0;
  std::size_t distance = 0;
};

/// Strict reader for the event CSV; throws std::runtime_error with the line
/// number on any deviation from the schema.
std::vector<TraceCsvRow> read_trace_csv(std::istream& in);

// Summary CSV: one row per (config, n, target). target is "optimum" or a
// fitness value.
inline constexpr std::string_view kSummaryCsvHeader =
    "algo,n,lambda1,lambda2,k,d_switch,start_distance,target,runs,count,mean,sd,ci_low,ci_high";

struct SummaryRow {
  PolicyKind algo = PolicyKind::opo_ea;
  std::size_t n = 0;
  TraceParams params;
  std::optional<std::size_t> start_distance;
  std::optional<Fitness> target;  // nullopt = optimum
  std::size_t runs = 0;           // runs attempted; stats.count runs reached the target
  SummaryStats stats;
};

void write_summary_header(std::ostream& out);
void write_summary_row(std::ostream& out, const SummaryRow& row);

}  // namespace oasbench
