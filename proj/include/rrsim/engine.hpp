#ifndef RRSIM_ENGINE_HPP
#define RRSIM_ENGINE_HPP

#include <vector>

#include "rrsim/types.hpp"

namespace rrsim {

// Event-driven simulation: the clock jumps straight between arrival, slice
// expiry and completion instants. Event order at one instant is completions,
// then arrivals, then the requeue of the preempted process, then the next
// dispatch. The trace holds one segment per dispatch, so a segment never
// exceeds its slice and the dispatch count equals the segment count.
//
// Context switches count every dispatch whose pid differs from the previously
// running pid; re-dispatching the same pid counts only when
// cfg.count_self_redispatch_as_switch is set. Each counted switch charges
// cfg.switch_overhead before the segment starts.
ScheduleTrace simulate(const std::vector<ProcessSpec>& taskset, const PolicyConfig& cfg);

// Reference engine with the same contract, advancing one millisecond per step
// with an explicit slice countdown and its own queue bookkeeping. Kept
// deliberately naive and separate from simulate() so the two can check each
// other; for every (taskset, cfg) the traces must be identical.
ScheduleTrace tick_simulate(const std::vector<ProcessSpec>& taskset, const PolicyConfig& cfg);

}  // namespace rrsim

#endif
