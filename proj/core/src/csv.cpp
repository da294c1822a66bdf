#include "oasbench/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace oasbench {

void write_trace_header(std::ostream& out) { out << kTraceCsvHeader << '\n'; }

void write_trace_rows(std::ostream& out, const RunTrace& trace) {
  const std::string_view algo = to_string(trace.policy);
  for (const TraceEvent& e : trace.events) {
    out << trace.run_id << ',' << algo << ',' << trace.n << ',' << trace.params.lambda1 << ','
        << trace.params.lambda2 << ',' << trace.params.k << ',' << trace.params.d_switch << ',' << trace.seed
        << ',' << to_string(e.type) << ',' << e.evaluations << ',' << e.fitness << ',' << e.distance << '\n';
  }
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad numeric field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<TraceCsvRow> read_trace_csv(std::istream& in) {
  std::vector<TraceCsvRow> rows;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("line 1: missing header");
  if (line != kTraceCsvHeader) throw std::runtime_error("line 1: unexpected header");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      throw std::runtime_error("line " + std::to_string(line_no) + ": CR line ending");
    }
    const auto f = split(line);
    if (f.size() != 12) throw std::runtime_error("line " + std::to_string(line_no) + ": expected 12 fields");
    TraceCsvRow row;
    row.run_id = parse_number<std::uint64_t>(f[0], line_no);
    const auto algo = parse_policy_kind(f[1]);
    if (!algo) throw std::runtime_error("line " + std::to_string(line_no) + ": unknown algo");
    row.algo = *algo;
    row.n = parse_number<std::size_t>(f[2], line_no);
    row.params.lambda1 = parse_number<std::size_t>(f[3], line_no);
    row.params.lambda2 = parse_number<std::size_t>(f[4], line_no);
    row.params.k = parse_number<std::uint64_t>(f[5], line_no);
    row.params.d_switch = parse_number<std::size_t>(f[6], line_no);
    row.seed = parse_number<std::uint64_t>(f[7], line_no);
    const auto type = parse_event_type(f[8]);
    if (!type) throw std::runtime_error("line " + std::to_string(line_no) + ": unknown event_type");
    row.event_type = *type;
    row.evaluations = parse_number<Evaluations>(f[9], line_no);
    row.fitness = parse_number<Fitness>(f[10], line_no);
    row.distance = parse_number<std::size_t>(f[11], line_no);
    rows.push_back(row);
  }
  return rows;
}

void write_summary_header(std::ostream& out) { out << kSummaryCsvHeader << '\n'; }

void write_summary_row(std::ostream& out, const SummaryRow& row) {
  out << to_string(row.algo) << ',' << row.n << ',' << row.params.lambda1 << ',' << row.params.lambda2 << ','
      << row.params.k << ',' << row.params.d_switch << ',';
  if (row.start_distance) out << *row.start_distance;
  out << ',';
  if (row.target) {
    out << *row.target;
  } else {
    out << "optimum";
  }
  const auto flags = out.flags();
  const auto precision = out.precision();
  out.setf(std::ios::fixed);
  out.precision(3);
  out << ',' << row.runs << ',' << row.stats.count << ',' << row.stats.mean << ',' << row.stats.sd << ','
      << row.stats.ci_low << ',' << row.stats.ci_high << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace oasbench
