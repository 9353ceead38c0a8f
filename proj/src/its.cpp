#include "rrsim/its.hpp"

#include <algorithm>

namespace rrsim {

Ms priority_component(int priority, const PolicyConfig& cfg) {
    auto it = cfg.pc_map.find(priority);
    return it == cfg.pc_map.end() ? 0 : it->second;
}

Ms shortness_component(Ms burst, const PolicyConfig& cfg) {
    Ms sc = burst < cfg.sc_threshold ? 1 : 0;
    return std::min(sc, burst - 1);
}

CscResult context_switch_component(Ms burst, Ms cc, const PolicyConfig& cfg) {
    Ms balance = burst - cc;
    Ms csc = balance > 0 && balance < cfg.quantum ? balance : 0;
    return {balance, csc};
}

ItsBreakdown compute_its(const ProcessSpec& proc, const PolicyConfig& cfg) {
    ItsBreakdown b;
    b.pid = proc.pid;
    b.ots = cfg.quantum;
    b.pc = priority_component(proc.priority, cfg);
    b.sc = shortness_component(proc.burst, cfg);
    b.cc = b.ots + b.pc + b.sc;
    CscResult csc = context_switch_component(proc.burst, b.cc, cfg);
    b.balance = csc.balance;
    b.csc = csc.csc;
    b.its = b.ots + b.pc + b.sc + b.csc;
    return b;
}

std::vector<ItsBreakdown> compute_its_table(const std::vector<ProcessSpec>& taskset,
                                            const PolicyConfig& cfg) {
    std::vector<ItsBreakdown> table;
    table.reserve(taskset.size());
    for (const ProcessSpec& p : taskset) table.push_back(compute_its(p, cfg));
    return table;
}

}  // namespace rrsim
