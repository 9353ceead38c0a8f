#ifndef RRSIM_TESTS_HELPERS_HPP
#define RRSIM_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "rrsim/its.hpp"
#include "rrsim/metrics.hpp"
#include "rrsim/types.hpp"

namespace rrsim::testing {

inline std::vector<ProcessSpec> demo_taskset() {
    return {
        {1, 0, 25, 2}, {2, 0, 5, 3}, {3, 0, 15, 1}, {4, 0, 8, 2}, {5, 0, 10, 1},
    };
}

inline PolicyConfig demo_config(Policy policy, Ms quantum = 4) {
    PolicyConfig cfg;
    cfg.policy = policy;
    cfg.quantum = quantum;
    return cfg;
}

// Random PolicyConfig with a monotone pc_map over priorities 1..5.
inline PolicyConfig random_config(Policy policy, std::mt19937_64& rng) {
    PolicyConfig cfg;
    cfg.policy = policy;
    cfg.quantum = 1 + static_cast<Ms>(rng() % 10);
    cfg.sc_threshold = 1 + static_cast<Ms>(rng() % 20);
    Ms bonus = static_cast<Ms>(rng() % 4);
    for (int prio = 1; prio <= 5; ++prio) {
        if (bonus > 0) cfg.pc_map[prio] = bonus;
        if (bonus > 0 && rng() % 2 == 0) --bonus;
    }
    if (cfg.pc_map.empty()) cfg.pc_map = {{1, 1}};
    return cfg;
}

// Checks every structural invariant of a completed trace. Returns
// human-readable violations; empty means the trace is sound.
inline std::vector<std::string> trace_violations(const ScheduleTrace& t) {
    std::vector<std::string> bad;
    auto complain = [&bad](const std::string& msg) { bad.push_back(msg); };

    std::map<int, const ProcessSpec*> by_pid;
    for (const ProcessSpec& p : t.taskset) by_pid[p.pid] = &p;

    std::map<int, Ms> slice;
    for (const ProcessSpec& p : t.taskset)
        slice[p.pid] =
            t.config.policy == Policy::ITS ? compute_its(p, t.config).its : t.config.quantum;

    // segment geometry
    Ms prev_end = 0;
    for (std::size_t i = 0; i < t.segments.size(); ++i) {
        const TimelineSegment& s = t.segments[i];
        if (!by_pid.count(s.pid)) complain("segment for unknown pid " + std::to_string(s.pid));
        if (s.end <= s.start)
            complain("empty or inverted segment at index " + std::to_string(i));
        if (s.start < prev_end) complain("overlapping segments at index " + std::to_string(i));
        if (by_pid.count(s.pid) && s.start < by_pid[s.pid]->arrival)
            complain("pid " + std::to_string(s.pid) + " runs before its arrival");
        if (by_pid.count(s.pid) && s.end - s.start > slice[s.pid])
            complain("segment longer than the slice of pid " + std::to_string(s.pid));
        prev_end = s.end;
    }

    // per-process accounting
    std::map<int, Ms> executed;
    std::map<int, Ms> first_start;
    std::map<int, Ms> last_end;
    for (const TimelineSegment& s : t.segments) {
        executed[s.pid] += s.end - s.start;
        if (!first_start.count(s.pid)) first_start[s.pid] = s.start;
        last_end[s.pid] = s.end;
    }
    for (const ProcessSpec& p : t.taskset) {
        if (executed[p.pid] != p.burst)
            complain("pid " + std::to_string(p.pid) + " executed " +
                     std::to_string(executed[p.pid]) + " of burst " + std::to_string(p.burst));
        auto done = t.completion.find(p.pid);
        if (done == t.completion.end())
            complain("pid " + std::to_string(p.pid) + " has no completion");
        else if (done->second != last_end[p.pid])
            complain("completion of pid " + std::to_string(p.pid) + " is not its last segment end");
        auto first = t.first_dispatch.find(p.pid);
        if (first == t.first_dispatch.end())
            complain("pid " + std::to_string(p.pid) + " has no first dispatch");
        else if (first->second != first_start[p.pid])
            complain("first dispatch of pid " + std::to_string(p.pid) + " mismatches the trace");
    }
    if (t.completion.size() != t.taskset.size()) complain("stray completion entries");
    if (t.first_dispatch.size() != t.taskset.size()) complain("stray first dispatch entries");

    // a short segment means the process finished there
    for (const TimelineSegment& s : t.segments) {
        if (!by_pid.count(s.pid)) continue;
        if (s.end - s.start < slice[s.pid] && t.completion.count(s.pid) &&
            t.completion.at(s.pid) != s.end)
            complain("short segment of pid " + std::to_string(s.pid) +
                     " does not end at its completion");
    }

    // work conservation: idle only when nothing arrived is unfinished, and the
    // gap ends at the next arrival (switch overhead introduces legal gaps)
    if (t.config.switch_overhead == 0) {
        Ms gap_start = 0;
        for (const TimelineSegment& s : t.segments) {
            if (s.start > gap_start) {
                Ms next_arrival = std::numeric_limits<Ms>::max();
                for (const ProcessSpec& p : t.taskset) {
                    if (p.arrival <= gap_start && t.completion.at(p.pid) > gap_start)
                        complain("idle at " + std::to_string(gap_start) + " while pid " +
                                 std::to_string(p.pid) + " is ready");
                    if (p.arrival > gap_start) next_arrival = std::min(next_arrival, p.arrival);
                }
                if (next_arrival != s.start)
                    complain("idle gap at " + std::to_string(gap_start) +
                             " does not end at the next arrival");
            }
            gap_start = s.end;
        }
    }

    // context switch recount
    std::int64_t switches = 0;
    for (std::size_t i = 1; i < t.segments.size(); ++i) {
        if (t.segments[i].pid != t.segments[i - 1].pid ||
            t.config.count_self_redispatch_as_switch)
            ++switches;
    }
    if (switches != t.context_switches)
        complain("context switches " + std::to_string(t.context_switches) + ", recount " +
                 std::to_string(switches));

    return bad;
}

// Cross-checks a report against its trace.
inline std::vector<std::string> metrics_violations(const ScheduleTrace& t,
                                                   const MetricsReport& m) {
    std::vector<std::string> bad;
    auto complain = [&bad](const std::string& msg) { bad.push_back(msg); };

    if (m.n != static_cast<int>(t.taskset.size())) complain("n mismatch");
    if (m.per_process.size() != t.taskset.size()) complain("per-process row count mismatch");

    Ms sum_wait = 0, sum_turn = 0, sum_burst = 0, min_response = std::numeric_limits<Ms>::max();
    bool all_zero_arrivals = true;
    for (std::size_t i = 0; i < m.per_process.size() && i < t.taskset.size(); ++i) {
        const ProcessMetrics& pm = m.per_process[i];
        const ProcessSpec& p = t.taskset[i];
        if (pm.pid != p.pid) complain("per-process rows not in taskset order");
        if (pm.turnaround != pm.completion - p.arrival) complain("turnaround identity broken");
        if (pm.waiting != pm.turnaround - p.burst) complain("waiting identity broken");
        if (pm.response != t.first_dispatch.at(p.pid) - p.arrival)
            complain("response identity broken");
        if (pm.waiting < 0 || pm.turnaround < 0 || pm.response < 0)
            complain("negative metric for pid " + std::to_string(p.pid));
        sum_wait += pm.waiting;
        sum_turn += pm.turnaround;
        sum_burst += p.burst;
        min_response = std::min(min_response, pm.response);
        all_zero_arrivals = all_zero_arrivals && p.arrival == 0;
    }
    if (sum_turn != sum_wait + sum_burst) complain("sum turnaround != sum waiting + sum burst");
    if (m.n > 0) {
        if (m.avg_waiting != Ratio(sum_wait, m.n)) complain("avg waiting not exact");
        if (m.avg_turnaround != Ratio(sum_turn, m.n)) complain("avg turnaround not exact");
        if (all_zero_arrivals && min_response != 0)
            complain("no process responded at once despite zero arrivals");
    }
    Ms makespan = t.segments.empty() ? 0 : t.segments.back().end;
    if (m.makespan != makespan) complain("makespan mismatch");
    if (m.n > 0 && makespan > 0 && m.throughput != Ratio(m.n, makespan))
        complain("throughput not n/makespan");
    if (m.context_switches != t.context_switches) complain("context switches not copied");
    if (m.dispatches != static_cast<std::int64_t>(t.segments.size()))
        complain("dispatch count is not the segment count");
    return bad;
}

}  // namespace rrsim::testing

#endif
