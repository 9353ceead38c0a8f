#ifndef RRSIM_QUEUE_HPP
#define RRSIM_QUEUE_HPP

#include <deque>
#include <map>
#include <vector>

#include "rrsim/types.hpp"

namespace rrsim {

// Ready queue for one simulation run. The queue discipline is the only thing
// that differs between policies:
//
//   rr / its  admission appends at the tail (first come first serve).
//   srr       admission keeps never-dispatched processes sorted by
//             (declared burst, pid); they form a prefix ahead of the
//             cycled tail and sorting never reorders that tail.
//
// Preempted processes always rejoin at the tail, so service stays cyclic.
// The per-dispatch slice is fixed at admission: the quantum for rr/srr, the
// precomputed intelligent slice for its.
class ReadyQueue {
public:
    struct Dispatch {
        int pid = 0;
        Ms slice = 0;
    };

    ReadyQueue(const PolicyConfig& cfg, const std::vector<ProcessSpec>& taskset);

    // First entry of an arrived process. Throws if the pid is unknown,
    // already queued/dispatched, or already finished.
    void admit(int pid);

    // Pops the head and hands out its slice. Throws on an empty queue.
    Dispatch next();

    // Re-enters a just-preempted process at the tail. Throws if it was not
    // the dispatched one or has no work left.
    void requeue(int pid, Ms remaining);

    // Marks the dispatched process as done; it can never be queued again.
    void finish(int pid);

    bool empty() const { return queue_.empty(); }

    Ms slice_for(int pid) const;

private:
    enum class State { Idle, Queued, Dispatched, Finished };

    struct Entry {
        ProcessSpec spec;
        Ms slice = 0;
        Ms remaining = 0;
        State state = State::Idle;
    };

    Entry& entry(int pid);

    Policy policy_;
    std::map<int, Entry> entries_;
    std::deque<int> queue_;
    std::size_t sorted_prefix_ = 0;  // srr: length of the sorted admission prefix
};

}  // namespace rrsim

#endif
