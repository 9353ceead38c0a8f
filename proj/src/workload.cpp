#include "rrsim/workload.hpp"

#include <random>

namespace rrsim {

std::vector<ProcessSpec> generate_taskset(const TasksetParams& params, std::uint64_t seed) {
    if (params.n < 0) throw SchedError("taskset size must be >= 0");
    if (params.burst_lo < 1) throw SchedError("burst range must start at 1 or above");
    if (params.burst_lo > params.burst_hi) throw SchedError("empty burst range");
    if (params.priority_lo < 1) throw SchedError("priority range must start at 1 or above");
    if (params.priority_lo > params.priority_hi) throw SchedError("empty priority range");
    if (params.arrival_lo < 0) throw SchedError("arrival range must start at 0 or above");
    if (params.arrival_lo > params.arrival_hi) throw SchedError("empty arrival range");

    std::mt19937_64 rng(seed);
    auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    std::vector<ProcessSpec> taskset;
    taskset.reserve(static_cast<std::size_t>(params.n));
    for (int pid = 1; pid <= params.n; ++pid) {
        ProcessSpec p;
        p.pid = pid;
        p.arrival = draw(params.arrival_lo, params.arrival_hi);
        p.burst = draw(params.burst_lo, params.burst_hi);
        p.priority = static_cast<int>(draw(params.priority_lo, params.priority_hi));
        taskset.push_back(p);
    }
    return taskset;
}

}  // namespace rrsim
