#ifndef RRSIM_ITS_HPP
#define RRSIM_ITS_HPP

#include <vector>

#include "rrsim/types.hpp"

namespace rrsim {

// Per-process slice decomposition. The final slice is
//   its = ots + pc + sc + csc
// where cc = ots + pc + sc and csc extends the slice to cover a small
// leftover (0 < burst - cc < ots) so the process finishes in one dispatch.
struct ItsBreakdown {
    int pid = 0;
    Ms ots = 0;
    Ms pc = 0;
    Ms sc = 0;
    Ms cc = 0;
    Ms balance = 0;  // burst - cc, may be negative
    Ms csc = 0;
    Ms its = 0;

    friend bool operator==(const ItsBreakdown&, const ItsBreakdown&) = default;
};

// Slice bonus for a priority number; absent pc_map entries give 0.
Ms priority_component(int priority, const PolicyConfig& cfg);

// 1 for bursts below cfg.sc_threshold, else 0, always kept below the burst
// itself (a burst of 1 gets no bonus).
Ms shortness_component(Ms burst, const PolicyConfig& cfg);

struct CscResult {
    Ms balance = 0;
    Ms csc = 0;

    friend bool operator==(const CscResult&, const CscResult&) = default;
};

// balance = burst - cc; the balance becomes the switch-avoidance extension
// exactly when 0 < balance < quantum.
CscResult context_switch_component(Ms burst, Ms cc, const PolicyConfig& cfg);

// Full decomposition for one process. Pure: depends only on (proc, cfg).
ItsBreakdown compute_its(const ProcessSpec& proc, const PolicyConfig& cfg);

// Admission-time table for a whole taskset, in the given order.
std::vector<ItsBreakdown> compute_its_table(const std::vector<ProcessSpec>& taskset,
                                            const PolicyConfig& cfg);

}  // namespace rrsim

#endif
