#ifndef RRSIM_TYPES_HPP
#define RRSIM_TYPES_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrsim {

// All times are integer milliseconds.
using Ms = std::int64_t;

enum class Policy { RR, SRR, ITS };

const char* policy_name(Policy p);
Policy policy_from_name(const std::string& name);

// Base error for invalid tasksets, configs, traces and file contents.
struct SchedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A file could not be opened or read.
struct FileError : SchedError {
    using SchedError::SchedError;
};

// One task's admission record. `burst` is the declared total CPU demand;
// policies never learn a different value at runtime.
struct ProcessSpec {
    int pid = 0;       // unique, >= 1
    Ms arrival = 0;    // >= 0
    Ms burst = 0;      // >= 1
    int priority = 1;  // >= 1, 1 = highest

    friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

struct PolicyConfig {
    Policy policy = Policy::RR;
    // Baseline slice (OTS): the quantum a process gets with no special treatment.
    Ms quantum = 4;
    // Declared bursts strictly below this earn the shortness bonus.
    Ms sc_threshold = 10;
    // Priority number -> slice bonus. Absent priorities get 0. Effective values
    // must be non-increasing as the priority number grows (1 = highest priority).
    std::map<int, Ms> pc_map = {{1, 1}};
    // When the sole ready process is preempted and immediately re-dispatched,
    // count that as a context switch too.
    bool count_self_redispatch_as_switch = false;
    // Time charged on every counted context switch. Zero keeps the classic
    // cost-free accounting used by the standard comparison tables.
    Ms switch_overhead = 0;

    friend bool operator==(const PolicyConfig&, const PolicyConfig&) = default;
};

// Half-open execution interval [start, end) of one dispatch.
struct TimelineSegment {
    int pid = 0;
    Ms start = 0;
    Ms end = 0;

    friend bool operator==(const TimelineSegment&, const TimelineSegment&) = default;
};

// Complete result of one simulation run. Segments are one-per-dispatch in
// increasing start order; consecutive segments of the same pid happen only
// when a preempted process finds the queue otherwise empty.
struct ScheduleTrace {
    PolicyConfig config;
    std::vector<ProcessSpec> taskset;  // validated (arrival, pid) order
    std::vector<TimelineSegment> segments;
    std::map<int, Ms> completion;
    std::map<int, Ms> first_dispatch;
    std::int64_t context_switches = 0;

    friend bool operator==(const ScheduleTrace&, const ScheduleTrace&) = default;
};

// Exact rational, normalized to lowest terms with positive denominator.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d);

    // Integer rendering, truncated toward zero.
    std::int64_t trunc() const { return num / den; }
    // Exact decimal when the expansion terminates ("31.8"), else "num/den".
    std::string str() const;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

bool operator<(const Ratio& a, const Ratio& b);
inline bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
inline bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
inline bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

// Checks field ranges and pid uniqueness, then returns the taskset ordered by
// (arrival, pid). Throws SchedError naming the offending pid.
std::vector<ProcessSpec> validate_taskset(std::vector<ProcessSpec> specs);

// Throws SchedError on out-of-range fields or a non-monotone pc_map.
void validate_config(const PolicyConfig& cfg);

}  // namespace rrsim

#endif
