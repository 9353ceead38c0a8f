#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rrsim/engine.hpp"
#include "rrsim/io.hpp"
#include "rrsim/metrics.hpp"
#include "rrsim/types.hpp"
#include "rrsim/workload.hpp"

namespace rrsim {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw FileError("cannot read file: " + path);
    return buf.str();
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text,
                                                  const std::string& flag) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw SchedError(flag + ": expected LO:HI, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw SchedError(flag + ": expected LO:HI, got '" + text + "'");
    }
}

std::map<int, Ms> parse_pc_map(const std::string& text) {
    std::map<int, Ms> map;
    if (text.empty()) return map;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw SchedError("--pc-map: expected PRIO:BONUS entries, got '" + item + "'");
        try {
            int prio = std::stoi(item.substr(0, colon));
            Ms bonus = std::stoll(item.substr(colon + 1));
            map[prio] = bonus;
        } catch (const std::exception&) {
            throw SchedError("--pc-map: expected PRIO:BONUS entries, got '" + item + "'");
        }
    }
    return map;
}

struct ConfigOpts {
    Ms quantum = 4;
    Ms sc_threshold = 10;
    std::string pc_map = "1:1";
    bool count_self_redispatch = false;
    Ms switch_overhead = 0;

    PolicyConfig to_config(Policy policy) const {
        PolicyConfig cfg;
        cfg.policy = policy;
        cfg.quantum = quantum;
        cfg.sc_threshold = sc_threshold;
        cfg.pc_map = parse_pc_map(pc_map);
        cfg.count_self_redispatch_as_switch = count_self_redispatch;
        cfg.switch_overhead = switch_overhead;
        validate_config(cfg);
        return cfg;
    }
};

void add_config_options(CLI::App* cmd, ConfigOpts& opts) {
    cmd->add_option("--quantum", opts.quantum, "baseline time slice in ms (OTS)")
        ->capture_default_str();
    cmd->add_option("--sc-threshold", opts.sc_threshold,
                    "bursts below this earn the shortness bonus")
        ->capture_default_str();
    cmd->add_option("--pc-map", opts.pc_map, "priority bonuses as PRIO:BONUS[,PRIO:BONUS...]")
        ->capture_default_str();
    cmd->add_flag("--count-self-redispatch", opts.count_self_redispatch,
                  "count re-dispatching the same process as a context switch");
    cmd->add_option("--switch-overhead", opts.switch_overhead,
                    "ms charged per counted context switch")
        ->capture_default_str();
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"preemptive round-robin scheduling simulator (rr, srr, its)"};
    app.require_subcommand(1);

    // run
    std::string run_file;
    std::string run_policy = "rr";
    std::string run_format = "json";
    bool run_oracle = false;
    ConfigOpts run_opts;
    CLI::App* run = app.add_subcommand("run", "simulate one policy over a taskset file");
    run->add_option("file", run_file, "taskset csv file")->required();
    run->add_option("--policy", run_policy, "rr, srr or its")
        ->capture_default_str()
        ->check(CLI::IsMember({"rr", "srr", "its"}));
    add_config_options(run, run_opts);
    run->add_option("--format", run_format, "json, csv or gantt")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv", "gantt"}));
    run->add_flag("--oracle", run_oracle, "use the millisecond reference engine");
    run->callback([&] {
        PolicyConfig cfg = run_opts.to_config(policy_from_name(run_policy));
        std::vector<ProcessSpec> taskset = parse_taskset_csv(read_file(run_file));
        ScheduleTrace trace = run_oracle ? tick_simulate(taskset, cfg) : simulate(taskset, cfg);
        MetricsReport metrics = compute_metrics(trace);
        if (run_format == "json")
            std::cout << emit_trace_json(trace, metrics);
        else if (run_format == "csv")
            std::cout << emit_trace_csv(trace);
        else
            std::cout << emit_gantt(trace);
    });

    // compare
    std::string cmp_file;
    std::string cmp_format = "table";
    bool cmp_oracle = false;
    ConfigOpts cmp_opts;
    CLI::App* cmp = app.add_subcommand("compare", "run rr, srr and its side by side");
    cmp->add_option("file", cmp_file, "taskset csv file")->required();
    add_config_options(cmp, cmp_opts);
    cmp->add_option("--format", cmp_format, "table or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "json"}));
    cmp->add_flag("--oracle", cmp_oracle, "use the millisecond reference engine");
    cmp->callback([&] {
        std::vector<ProcessSpec> taskset = parse_taskset_csv(read_file(cmp_file));
        std::vector<std::pair<Policy, MetricsReport>> reports;
        for (Policy policy : {Policy::RR, Policy::SRR, Policy::ITS}) {
            PolicyConfig cfg = cmp_opts.to_config(policy);
            ScheduleTrace trace = cmp_oracle ? tick_simulate(taskset, cfg) : simulate(taskset, cfg);
            reports.emplace_back(policy, compute_metrics(trace));
        }
        ComparisonTable table = compare(reports);
        std::cout << (cmp_format == "json" ? emit_comparison_json(table)
                                           : emit_comparison_text(table));
    });

    // gen
    int gen_n = 0;
    std::string gen_burst = "1:50";
    std::string gen_priority = "1:5";
    std::string gen_arrival = "0:0";
    std::uint64_t gen_seed = 1;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic taskset csv");
    gen->add_option("--n", gen_n, "number of processes")->required();
    gen->add_option("--burst", gen_burst, "burst range LO:HI in ms")->capture_default_str();
    gen->add_option("--priority", gen_priority, "priority range LO:HI")->capture_default_str();
    gen->add_option("--arrival", gen_arrival, "arrival range LO:HI in ms")->capture_default_str();
    gen->add_option("--seed", gen_seed, "prng seed")->capture_default_str();
    gen->callback([&] {
        TasksetParams params;
        params.n = gen_n;
        std::tie(params.burst_lo, params.burst_hi) = parse_range(gen_burst, "--burst");
        auto prio = parse_range(gen_priority, "--priority");
        params.priority_lo = static_cast<int>(prio.first);
        params.priority_hi = static_cast<int>(prio.second);
        std::tie(params.arrival_lo, params.arrival_hi) = parse_range(gen_arrival, "--arrival");
        std::cout << emit_taskset_csv(generate_taskset(params, gen_seed));
    });

    // validate
    std::string val_file;
    CLI::App* val = app.add_subcommand("validate", "check a taskset csv file");
    val->add_option("file", val_file, "taskset csv file")->required();
    val->callback([&] {
        std::vector<ProcessSpec> taskset = parse_taskset_csv(read_file(val_file));
        std::cout << "ok: " << taskset.size() << " processes\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SchedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rrsim
