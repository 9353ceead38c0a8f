#include "rrsim/metrics.hpp"

namespace rrsim {

namespace {

// Non-reproducible reference figures for srr on the classic five-process demo
// workload; surfaced whenever srr appears in a comparison.
const char* const kSrrNote =
    "srr: sorted admission is followed by plain cyclic requeue; reference figures "
    "sometimes quoted for the five-process demo workload (avg waiting 22, avg "
    "turnaround 36) do not correspond to any trace of that discipline - the derived "
    "values are avg waiting 27.0 and avg turnaround 39.6";

}  // namespace

MetricsReport compute_metrics(const ScheduleTrace& trace) {
    MetricsReport r;
    r.n = static_cast<int>(trace.taskset.size());

    Ms sum_waiting = 0;
    Ms sum_turnaround = 0;
    for (const ProcessSpec& p : trace.taskset) {
        auto done = trace.completion.find(p.pid);
        if (done == trace.completion.end())
            throw SchedError("trace has unfinished process pid " + std::to_string(p.pid));
        ProcessMetrics m;
        m.pid = p.pid;
        m.arrival = p.arrival;
        m.burst = p.burst;
        m.completion = done->second;
        m.turnaround = m.completion - p.arrival;
        m.waiting = m.turnaround - p.burst;
        m.response = trace.first_dispatch.at(p.pid) - p.arrival;
        r.per_process.push_back(m);
        sum_waiting += m.waiting;
        sum_turnaround += m.turnaround;
    }

    r.makespan = trace.segments.empty() ? 0 : trace.segments.back().end;
    if (r.n > 0) {
        r.avg_waiting = Ratio(sum_waiting, r.n);
        r.avg_turnaround = Ratio(sum_turnaround, r.n);
    }
    if (r.n > 0 && r.makespan > 0) r.throughput = Ratio(r.n, r.makespan);
    r.context_switches = trace.context_switches;
    r.dispatches = static_cast<std::int64_t>(trace.segments.size());
    return r;
}

ComparisonTable compare(const std::vector<std::pair<Policy, MetricsReport>>& reports) {
    if (reports.size() < 2) throw SchedError("comparison needs at least two reports");

    const MetricsReport& first = reports.front().second;
    for (const auto& [policy, report] : reports) {
        if (report.n != first.n)
            throw SchedError("comparison reports cover different tasksets");
        for (std::size_t i = 0; i < report.per_process.size(); ++i) {
            const ProcessMetrics& a = report.per_process[i];
            const ProcessMetrics& b = first.per_process[i];
            if (a.pid != b.pid || a.arrival != b.arrival || a.burst != b.burst)
                throw SchedError("comparison reports cover different tasksets");
        }
    }

    ComparisonTable table;
    bool has_srr = false;
    for (const auto& [policy, report] : reports) {
        table.rows.push_back({policy, report});
        has_srr = has_srr || policy == Policy::SRR;
    }

    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const MetricsReport& r = table.rows[i].report;
        if (r.avg_waiting < table.rows[table.best_avg_waiting].report.avg_waiting)
            table.best_avg_waiting = i;
        if (r.avg_turnaround < table.rows[table.best_avg_turnaround].report.avg_turnaround)
            table.best_avg_turnaround = i;
        if (r.context_switches < table.rows[table.best_context_switches].report.context_switches)
            table.best_context_switches = i;
        if (table.rows[table.best_throughput].report.throughput < r.throughput)
            table.best_throughput = i;
    }

    if (has_srr) table.notes.push_back(kSrrNote);
    return table;
}

}  // namespace rrsim
