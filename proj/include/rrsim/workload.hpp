#ifndef RRSIM_WORKLOAD_HPP
#define RRSIM_WORKLOAD_HPP

#include <cstdint>
#include <vector>

#include "rrsim/types.hpp"

namespace rrsim {

struct TasksetParams {
    int n = 0;
    Ms burst_lo = 1;
    Ms burst_hi = 50;
    int priority_lo = 1;
    int priority_hi = 5;
    Ms arrival_lo = 0;
    Ms arrival_hi = 0;
};

// Synthetic taskset with pids 1..n. The generator is pinned so corpora never
// drift: std::mt19937_64 seeded with `seed`, one modulo-bounded draw per field,
// fields drawn in the order arrival, burst, priority for each pid in turn.
// Identical (params, seed) gives an identical taskset on every platform.
std::vector<ProcessSpec> generate_taskset(const TasksetParams& params, std::uint64_t seed);

}  // namespace rrsim

#endif
