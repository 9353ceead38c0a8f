#include "rrsim/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstddef>

#include "rrsim/its.hpp"

namespace rrsim {

namespace {

using ojson = nlohmann::ordered_json;

const char* const kTasksetHeader = "pid,arrival,burst,priority";

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t from = 0;
    while (true) {
        std::size_t at = text.find(sep, from);
        if (at == std::string::npos) {
            parts.push_back(text.substr(from));
            return parts;
        }
        parts.push_back(text.substr(from, at - from));
        from = at + 1;
    }
}

std::int64_t parse_int(const std::string& field, int lineno) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw SchedError("line " + std::to_string(lineno) + ": malformed integer '" + field + "'");
    return value;
}

ojson ratio_json(const Ratio& r) {
    ojson j;
    j["num"] = r.num;
    j["den"] = r.den;
    return j;
}

ojson config_json(const PolicyConfig& cfg) {
    ojson pc = ojson::object();
    for (const auto& [prio, bonus] : cfg.pc_map) pc[std::to_string(prio)] = bonus;
    ojson j;
    j["policy"] = policy_name(cfg.policy);
    j["quantum"] = cfg.quantum;
    j["sc_threshold"] = cfg.sc_threshold;
    j["pc_map"] = pc;
    j["count_self_redispatch_as_switch"] = cfg.count_self_redispatch_as_switch;
    j["switch_overhead"] = cfg.switch_overhead;
    return j;
}

ojson aggregate_json(const MetricsReport& m) {
    ojson j;
    j["n"] = m.n;
    j["avg_waiting"] = ratio_json(m.avg_waiting);
    j["avg_turnaround"] = ratio_json(m.avg_turnaround);
    j["context_switches"] = m.context_switches;
    j["throughput"] = ratio_json(m.throughput);
    j["makespan"] = m.makespan;
    return j;
}

// Writes `text` into `line` starting at `col`, growing the line as needed.
void put_at(std::string& line, std::size_t col, const std::string& text) {
    if (line.size() < col + text.size()) line.resize(col + text.size(), ' ');
    line.replace(col, text.size(), text);
}

}  // namespace

std::vector<ProcessSpec> parse_taskset_csv(const std::string& text) {
    std::vector<std::string> lines = split(text, '\n');
    for (std::string& line : lines)
        if (!line.empty() && line.back() == '\r') line.pop_back();

    if (lines.empty() || lines[0] != kTasksetHeader)
        throw SchedError(std::string("header mismatch: expected '") + kTasksetHeader + "'");

    std::vector<ProcessSpec> taskset;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty()) continue;
        int lineno = static_cast<int>(i) + 1;
        std::vector<std::string> fields = split(line, ',');
        if (fields.size() != 4)
            throw SchedError("line " + std::to_string(lineno) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        ProcessSpec p;
        p.pid = static_cast<int>(parse_int(fields[0], lineno));
        p.arrival = parse_int(fields[1], lineno);
        p.burst = parse_int(fields[2], lineno);
        p.priority = static_cast<int>(parse_int(fields[3], lineno));
        if (p.pid < 1)
            throw SchedError("line " + std::to_string(lineno) + ": pid must be >= 1");
        if (p.arrival < 0)
            throw SchedError("line " + std::to_string(lineno) + ": negative arrival for pid " +
                             std::to_string(p.pid));
        if (p.burst < 1)
            throw SchedError("line " + std::to_string(lineno) + ": non-positive burst for pid " +
                             std::to_string(p.pid));
        if (p.priority < 1)
            throw SchedError("line " + std::to_string(lineno) + ": priority must be >= 1 for pid " +
                             std::to_string(p.pid));
        taskset.push_back(p);
    }
    return validate_taskset(std::move(taskset));
}

std::string emit_taskset_csv(const std::vector<ProcessSpec>& taskset) {
    std::string out = kTasksetHeader;
    out += '\n';
    for (const ProcessSpec& p : taskset) {
        out += std::to_string(p.pid) + "," + std::to_string(p.arrival) + "," +
               std::to_string(p.burst) + "," + std::to_string(p.priority) + "\n";
    }
    return out;
}

std::string emit_trace_json(const ScheduleTrace& trace, const MetricsReport& metrics) {
    ojson j;
    j["policy"] = policy_name(trace.config.policy);
    j["config"] = config_json(trace.config);

    ojson segments = ojson::array();
    for (const TimelineSegment& s : trace.segments) {
        ojson seg;
        seg["pid"] = s.pid;
        seg["start"] = s.start;
        seg["end"] = s.end;
        segments.push_back(seg);
    }
    j["segments"] = segments;

    if (trace.config.policy == Policy::ITS) {
        ojson table = ojson::array();
        for (const ItsBreakdown& b : compute_its_table(trace.taskset, trace.config)) {
            ojson row;
            row["pid"] = b.pid;
            row["ots"] = b.ots;
            row["pc"] = b.pc;
            row["sc"] = b.sc;
            row["cc"] = b.cc;
            row["balance"] = b.balance;
            row["csc"] = b.csc;
            row["its"] = b.its;
            table.push_back(row);
        }
        j["its_table"] = table;
    }

    ojson per_process = ojson::array();
    for (const ProcessMetrics& m : metrics.per_process) {
        ojson row;
        row["pid"] = m.pid;
        row["completion"] = m.completion;
        row["waiting"] = m.waiting;
        row["turnaround"] = m.turnaround;
        row["response"] = m.response;
        per_process.push_back(row);
    }
    j["per_process"] = per_process;
    j["aggregate"] = aggregate_json(metrics);
    return j.dump(2) + "\n";
}

std::string emit_trace_csv(const ScheduleTrace& trace) {
    std::string out = "pid,start,end\n";
    for (const TimelineSegment& s : trace.segments) {
        out += std::to_string(s.pid) + "," + std::to_string(s.start) + "," +
               std::to_string(s.end) + "\n";
    }
    return out;
}

std::string emit_gantt(const ScheduleTrace& trace) {
    if (trace.segments.empty()) return "0\n";

    std::string border = "+";
    std::string lane = "|";
    std::vector<std::size_t> boundary_cols{0};
    for (const TimelineSegment& s : trace.segments) {
        std::string label = " P" + std::to_string(s.pid) + " ";
        std::size_t width = std::max(label.size(), std::to_string(s.start).size());
        label.append(width - label.size(), ' ');
        border += std::string(width, '-') + "+";
        lane += label + "|";
        boundary_cols.push_back(border.size() - 1);
    }

    std::string ruler;
    for (std::size_t i = 0; i < trace.segments.size(); ++i)
        put_at(ruler, boundary_cols[i], std::to_string(trace.segments[i].start));
    put_at(ruler, boundary_cols.back(), std::to_string(trace.segments.back().end));

    return border + "\n" + lane + "\n" + border + "\n" + ruler + "\n";
}

std::string emit_comparison_json(const ComparisonTable& table) {
    ojson j;
    j["n"] = table.rows.empty() ? 0 : table.rows.front().report.n;
    ojson rows = ojson::array();
    for (const ComparisonTable::Row& row : table.rows) {
        const MetricsReport& m = row.report;
        ojson r;
        r["policy"] = policy_name(row.policy);
        r["avg_waiting"] = ratio_json(m.avg_waiting);
        r["avg_waiting_trunc"] = m.avg_waiting.trunc();
        r["avg_turnaround"] = ratio_json(m.avg_turnaround);
        r["avg_turnaround_trunc"] = m.avg_turnaround.trunc();
        r["context_switches"] = m.context_switches;
        r["throughput"] = ratio_json(m.throughput);
        r["makespan"] = m.makespan;
        rows.push_back(r);
    }
    j["rows"] = rows;
    ojson best = ojson::object();
    if (!table.rows.empty()) {
        best["avg_waiting"] = policy_name(table.rows[table.best_avg_waiting].policy);
        best["avg_turnaround"] = policy_name(table.rows[table.best_avg_turnaround].policy);
        best["context_switches"] = policy_name(table.rows[table.best_context_switches].policy);
        best["throughput"] = policy_name(table.rows[table.best_throughput].policy);
    }
    j["best"] = best;
    j["notes"] = table.notes;
    return j.dump(2) + "\n";
}

std::string emit_comparison_text(const ComparisonTable& table) {
    const std::vector<std::string> headers = {"policy", "avg_waiting", "avg_turnaround",
                                              "context_switches", "throughput"};
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const MetricsReport& m = table.rows[i].report;
        auto avg_cell = [](const Ratio& r) {
            return r.str() + " (" + std::to_string(r.trunc()) + ")";
        };
        std::vector<std::string> row = {
            policy_name(table.rows[i].policy),
            avg_cell(m.avg_waiting) + (i == table.best_avg_waiting ? " *" : ""),
            avg_cell(m.avg_turnaround) + (i == table.best_avg_turnaround ? " *" : ""),
            std::to_string(m.context_switches) + (i == table.best_context_switches ? " *" : ""),
            m.throughput.str() + (i == table.best_throughput ? " *" : ""),
        };
        cells.push_back(std::move(row));
    }

    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < headers.size(); ++c) {
        std::size_t w = headers[c].size();
        for (const auto& row : cells) w = std::max(w, row[c].size());
        widths.push_back(w);
    }

    auto emit_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line.append(widths[c] - row[c].size() + 2, ' ');
        }
        return line + "\n";
    };

    std::string out = emit_row(headers);
    for (const auto& row : cells) out += emit_row(row);
    for (const std::string& note : table.notes) out += "note: " + note + "\n";
    return out;
}

}  // namespace rrsim
