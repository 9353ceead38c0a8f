#ifndef RRSIM_IO_HPP
#define RRSIM_IO_HPP

#include <string>
#include <vector>

#include "rrsim/metrics.hpp"
#include "rrsim/types.hpp"

namespace rrsim {

// Taskset files are plain CSV with the exact header
//   pid,arrival,burst,priority
// and one integer row per process. parse returns the validated taskset;
// errors carry the offending line number.
std::vector<ProcessSpec> parse_taskset_csv(const std::string& text);
std::string emit_taskset_csv(const std::vector<ProcessSpec>& taskset);

// Full run report:
// {policy, config, segments, its_table?, per_process, aggregate}. its_table is
// present only for the its policy. Key order and number formatting are fixed,
// so equal traces always serialize to equal bytes. Exact rationals appear as
// {"num": .., "den": ..} objects.
std::string emit_trace_json(const ScheduleTrace& trace, const MetricsReport& metrics);

// One segment per row: pid,start,end.
std::string emit_trace_csv(const ScheduleTrace& trace);

// Fixed-width one-lane chart with a time ruler along the cell boundaries.
std::string emit_gantt(const ScheduleTrace& trace);

std::string emit_comparison_json(const ComparisonTable& table);
std::string emit_comparison_text(const ComparisonTable& table);

// Command-line entry point (subcommands run, compare, gen, validate).
// Exit status: 0 success, 2 usage error, 3 unreadable file,
// 4 parse/validation error, 1 anything else.
int cli_main(int argc, char** argv);

}  // namespace rrsim

#endif
