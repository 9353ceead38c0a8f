#include "rrsim/queue.hpp"

#include <tuple>

#include "rrsim/its.hpp"

namespace rrsim {

ReadyQueue::ReadyQueue(const PolicyConfig& cfg, const std::vector<ProcessSpec>& taskset)
    : policy_(cfg.policy) {
    for (const ProcessSpec& p : taskset) {
        Ms slice = cfg.policy == Policy::ITS ? compute_its(p, cfg).its : cfg.quantum;
        entries_.emplace(p.pid, Entry{p, slice, p.burst, State::Idle});
    }
}

ReadyQueue::Entry& ReadyQueue::entry(int pid) {
    auto it = entries_.find(pid);
    if (it == entries_.end()) throw SchedError("unknown pid " + std::to_string(pid));
    return it->second;
}

void ReadyQueue::admit(int pid) {
    Entry& e = entry(pid);
    if (e.state == State::Finished)
        throw SchedError("admit of finished pid " + std::to_string(pid));
    if (e.state != State::Idle)
        throw SchedError("pid " + std::to_string(pid) + " is already queued");
    if (policy_ == Policy::SRR) {
        auto pos = queue_.begin();
        auto end = queue_.begin() + static_cast<std::ptrdiff_t>(sorted_prefix_);
        while (pos != end) {
            const Entry& q = entries_.at(*pos);
            if (std::tie(q.spec.burst, q.spec.pid) > std::tie(e.spec.burst, e.spec.pid)) break;
            ++pos;
        }
        queue_.insert(pos, pid);
        ++sorted_prefix_;
    } else {
        queue_.push_back(pid);
    }
    e.state = State::Queued;
}

ReadyQueue::Dispatch ReadyQueue::next() {
    if (queue_.empty()) throw SchedError("dispatch from an empty ready queue");
    int pid = queue_.front();
    queue_.pop_front();
    if (sorted_prefix_ > 0) --sorted_prefix_;
    Entry& e = entries_.at(pid);
    e.state = State::Dispatched;
    return {pid, e.slice};
}

void ReadyQueue::requeue(int pid, Ms remaining) {
    Entry& e = entry(pid);
    if (e.state != State::Dispatched)
        throw SchedError("requeue of pid " + std::to_string(pid) + " that is not dispatched");
    if (remaining < 1)
        throw SchedError("requeue of completed pid " + std::to_string(pid));
    e.remaining = remaining;
    e.state = State::Queued;
    queue_.push_back(pid);
}

void ReadyQueue::finish(int pid) {
    Entry& e = entry(pid);
    if (e.state != State::Dispatched)
        throw SchedError("finish of pid " + std::to_string(pid) + " that is not dispatched");
    e.remaining = 0;
    e.state = State::Finished;
}

Ms ReadyQueue::slice_for(int pid) const {
    auto it = entries_.find(pid);
    if (it == entries_.end()) throw SchedError("unknown pid " + std::to_string(pid));
    return it->second.slice;
}

}  // namespace rrsim
