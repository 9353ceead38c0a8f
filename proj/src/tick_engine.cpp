#include <cstddef>
#include <tuple>
#include <vector>

#include "rrsim/engine.hpp"
#include "rrsim/its.hpp"

namespace rrsim {

namespace {

// Bookkeeping local to the reference engine; intentionally not shared with
// ReadyQueue so the two engines stay independent.
struct TickProc {
    ProcessSpec spec;
    Ms slice = 0;
    Ms remaining = 0;
};

}  // namespace

ScheduleTrace tick_simulate(const std::vector<ProcessSpec>& taskset_in, const PolicyConfig& cfg) {
    validate_config(cfg);
    std::vector<ProcessSpec> taskset = validate_taskset(taskset_in);

    ScheduleTrace trace;
    trace.config = cfg;
    trace.taskset = taskset;

    std::vector<TickProc> procs;
    procs.reserve(taskset.size());
    for (const ProcessSpec& p : taskset) {
        Ms slice = cfg.policy == Policy::ITS ? compute_its(p, cfg).its : cfg.quantum;
        procs.push_back({p, slice, p.burst});
    }

    std::vector<std::size_t> queue;           // indexes into procs
    std::size_t sorted_prefix = 0;            // srr: never-dispatched prefix
    auto enqueue_admission = [&](std::size_t idx) {
        if (cfg.policy == Policy::SRR) {
            std::size_t pos = 0;
            while (pos < sorted_prefix) {
                const TickProc& q = procs[queue[pos]];
                if (std::tie(q.spec.burst, q.spec.pid) >
                    std::tie(procs[idx].spec.burst, procs[idx].spec.pid))
                    break;
                ++pos;
            }
            queue.insert(queue.begin() + static_cast<std::ptrdiff_t>(pos), idx);
            ++sorted_prefix;
        } else {
            queue.push_back(idx);
        }
    };

    std::size_t next_arrival = 0;
    std::size_t finished = 0;
    Ms t = 0;
    int running = -1;          // index into procs, -1 when the cpu is free
    Ms countdown = 0;          // execution ticks left in the current slice
    Ms overhead_wait = 0;      // switch-overhead ticks before execution starts
    int prev_pid = -1;
    bool open_segment = false; // current dispatch already has a segment

    while (finished < taskset.size()) {
        // Instant t. A slice that ran out releases the cpu now; the requeue
        // happens after this instant's arrivals have joined.
        int requeue_pending = -1;
        if (running != -1 && overhead_wait == 0 && countdown == 0) {
            requeue_pending = running;
            running = -1;
        }
        while (next_arrival < taskset.size() && taskset[next_arrival].arrival == t) {
            enqueue_admission(next_arrival);
            ++next_arrival;
        }
        if (requeue_pending != -1) queue.push_back(static_cast<std::size_t>(requeue_pending));

        if (running == -1 && !queue.empty()) {
            std::size_t idx = queue.front();
            queue.erase(queue.begin());
            if (sorted_prefix > 0) --sorted_prefix;
            int pid = procs[idx].spec.pid;
            bool switched = prev_pid != -1 &&
                            (pid != prev_pid || cfg.count_self_redispatch_as_switch);
            if (switched) ++trace.context_switches;
            overhead_wait = switched ? cfg.switch_overhead : 0;
            running = static_cast<int>(idx);
            countdown = procs[idx].slice;
            prev_pid = pid;
            open_segment = false;
        }

        if (running == -1) {
            ++t;  // idle tick; some process is still due to arrive
            continue;
        }
        if (overhead_wait > 0) {
            --overhead_wait;
            ++t;
            continue;
        }

        // Execute one millisecond.
        TickProc& cur = procs[static_cast<std::size_t>(running)];
        if (!open_segment) {
            if (!trace.first_dispatch.count(cur.spec.pid))
                trace.first_dispatch[cur.spec.pid] = t;
            trace.segments.push_back({cur.spec.pid, t, t + 1});
            open_segment = true;
        } else {
            trace.segments.back().end = t + 1;
        }
        --cur.remaining;
        --countdown;
        ++t;
        if (cur.remaining == 0) {
            trace.completion[cur.spec.pid] = t;
            ++finished;
            running = -1;
            open_segment = false;
        }
    }
    return trace;
}

}  // namespace rrsim
