#include "rrsim/engine.hpp"

#include <algorithm>
#include <cassert>

#include "rrsim/queue.hpp"

namespace rrsim {

ScheduleTrace simulate(const std::vector<ProcessSpec>& taskset_in, const PolicyConfig& cfg) {
    validate_config(cfg);
    std::vector<ProcessSpec> taskset = validate_taskset(taskset_in);

    ScheduleTrace trace;
    trace.config = cfg;
    trace.taskset = taskset;

    ReadyQueue queue(cfg, taskset);
    std::map<int, Ms> remaining;
    for (const ProcessSpec& p : taskset) remaining[p.pid] = p.burst;

    std::size_t next_arrival = 0;
    auto admit_until = [&](Ms t) {
        while (next_arrival < taskset.size() && taskset[next_arrival].arrival <= t) {
            queue.admit(taskset[next_arrival].pid);
            ++next_arrival;
        }
    };

    Ms clock = 0;
    int prev_pid = -1;
    std::size_t finished = 0;

    admit_until(clock);
    while (finished < taskset.size()) {
        if (queue.empty()) {
            // Idle: jump to the next arrival.
            assert(next_arrival < taskset.size());
            clock = std::max(clock, taskset[next_arrival].arrival);
            admit_until(clock);
            continue;
        }
        ReadyQueue::Dispatch d = queue.next();
        bool switched = prev_pid != -1 &&
                        (d.pid != prev_pid || cfg.count_self_redispatch_as_switch);
        if (switched) {
            ++trace.context_switches;
            clock += cfg.switch_overhead;
        }
        if (!trace.first_dispatch.count(d.pid)) trace.first_dispatch[d.pid] = clock;

        Ms run = std::min(d.slice, remaining[d.pid]);
        Ms end = clock + run;
        trace.segments.push_back({d.pid, clock, end});
        remaining[d.pid] -= run;
        prev_pid = d.pid;

        // Arrivals up to and including the preemption instant queue up before
        // the preempted process rejoins.
        admit_until(end);
        if (remaining[d.pid] == 0) {
            trace.completion[d.pid] = end;
            queue.finish(d.pid);
            ++finished;
        } else {
            queue.requeue(d.pid, remaining[d.pid]);
        }
        clock = end;
    }
    return trace;
}

}  // namespace rrsim
