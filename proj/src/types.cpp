#include "rrsim/types.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace rrsim {

const char* policy_name(Policy p) {
    switch (p) {
        case Policy::RR: return "rr";
        case Policy::SRR: return "srr";
        case Policy::ITS: return "its";
    }
    return "?";
}

Policy policy_from_name(const std::string& name) {
    if (name == "rr") return Policy::RR;
    if (name == "srr") return Policy::SRR;
    if (name == "its") return Policy::ITS;
    throw SchedError("unknown policy '" + name + "' (expected rr, srr or its)");
}

Ratio::Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw SchedError("ratio with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

bool operator<(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string Ratio::str() const {
    if (den == 1) return std::to_string(num);
    std::int64_t d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    int digits = std::max(twos, fives);
    if (d == 1 && digits <= 15) {
        std::int64_t scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        std::int64_t mag = num < 0 ? -num : num;
        std::int64_t scaled = mag * (scale / den);
        std::string frac = std::to_string(scaled % scale);
        frac.insert(frac.begin(), digits - frac.size(), '0');
        return (num < 0 ? "-" : "") + std::to_string(scaled / scale) + "." + frac;
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<ProcessSpec> validate_taskset(std::vector<ProcessSpec> specs) {
    std::set<int> seen;
    for (const ProcessSpec& p : specs) {
        if (p.pid < 1)
            throw SchedError("pid must be a positive integer (got " + std::to_string(p.pid) + ")");
        if (p.burst < 1)
            throw SchedError("non-positive burst for pid " + std::to_string(p.pid));
        if (p.arrival < 0)
            throw SchedError("negative arrival for pid " + std::to_string(p.pid));
        if (p.priority < 1)
            throw SchedError("priority must be >= 1 for pid " + std::to_string(p.pid));
        if (!seen.insert(p.pid).second)
            throw SchedError("duplicate pid " + std::to_string(p.pid));
    }
    std::sort(specs.begin(), specs.end(), [](const ProcessSpec& a, const ProcessSpec& b) {
        return std::tie(a.arrival, a.pid) < std::tie(b.arrival, b.pid);
    });
    return specs;
}

void validate_config(const PolicyConfig& cfg) {
    if (cfg.quantum < 1) throw SchedError("quantum must be >= 1");
    if (cfg.sc_threshold < 1) throw SchedError("sc-threshold must be >= 1");
    if (cfg.switch_overhead < 0) throw SchedError("switch-overhead must be >= 0");
    for (const auto& [prio, bonus] : cfg.pc_map) {
        if (prio < 1) throw SchedError("pc-map priority must be >= 1");
        if (bonus < 0) throw SchedError("pc-map bonus must be >= 0");
    }
    if (!cfg.pc_map.empty()) {
        // Effective bonus (absent priorities read as 0) must never grow as the
        // priority number grows.
        Ms prev = -1;
        for (int p = cfg.pc_map.rbegin()->first; p >= 1; --p) {
            auto it = cfg.pc_map.find(p);
            Ms bonus = it == cfg.pc_map.end() ? 0 : it->second;
            if (prev >= 0 && bonus < prev)
                throw SchedError("pc-map must be non-increasing in priority number (priority " +
                                 std::to_string(p) + " gets " + std::to_string(bonus) +
                                 ", priority " + std::to_string(p + 1) + " gets " +
                                 std::to_string(prev) + ")");
            prev = bonus;
        }
    }
}

}  // namespace rrsim
