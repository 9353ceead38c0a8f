#ifndef RRSIM_METRICS_HPP
#define RRSIM_METRICS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rrsim/types.hpp"

namespace rrsim {

struct ProcessMetrics {
    int pid = 0;
    Ms arrival = 0;
    Ms burst = 0;
    Ms completion = 0;
    Ms turnaround = 0;  // completion - arrival
    Ms waiting = 0;     // turnaround - burst
    Ms response = 0;    // first dispatch - arrival

    friend bool operator==(const ProcessMetrics&, const ProcessMetrics&) = default;
};

// Aggregates are exact rationals; integer renderings are derived from them on
// display (Ratio::trunc / Ratio::str), never stored.
struct MetricsReport {
    int n = 0;
    std::vector<ProcessMetrics> per_process;  // taskset (arrival, pid) order
    Ratio avg_waiting{0, 1};
    Ratio avg_turnaround{0, 1};
    Ratio throughput{0, 1};  // processes per millisecond
    std::int64_t context_switches = 0;
    std::int64_t dispatches = 0;  // = segment count of the trace
    Ms makespan = 0;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

// Per-process and aggregate statistics for a complete trace. Throws if any
// process in the taskset never finished.
MetricsReport compute_metrics(const ScheduleTrace& trace);

// Side-by-side view of several policies over one taskset. best_* hold the row
// index with the winning value per column (lowest waiting / turnaround /
// switches, highest throughput); ties keep the earliest row.
struct ComparisonTable {
    struct Row {
        Policy policy;
        MetricsReport report;
    };

    std::vector<Row> rows;
    std::size_t best_avg_waiting = 0;
    std::size_t best_avg_turnaround = 0;
    std::size_t best_context_switches = 0;
    std::size_t best_throughput = 0;
    std::vector<std::string> notes;
};

// Requires at least two reports, all describing the same taskset.
ComparisonTable compare(const std::vector<std::pair<Policy, MetricsReport>>& reports);

}  // namespace rrsim

#endif
