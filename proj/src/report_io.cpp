#include "gaptopo/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace gaptopo::io {

namespace {

Json flip_list(const std::vector<Flip>& flips) {
    Json out = Json::array();
    for (Flip f : flips) out.push_back(f.k);
    return out;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump();
}

void flatten_into(const Json& v, const std::string& key, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (const auto& [k, child] : v.items()) flatten_into(child, key.empty() ? k : key + "." + k, out);
        return;
    }
    if (v.is_array()) {
        std::string text;
        for (const Json& item : v) {
            if (!text.empty()) text += ' ';
            if (item.is_object()) {
                std::string joined;
                for (const auto& [k, field] : item.items()) {
                    if (!joined.empty()) joined += ':';
                    joined += scalar_text(field);
                }
                text += joined;
            } else {
                text += scalar_text(item);
            }
        }
        out.emplace_back(key, text);
        return;
    }
    out.emplace_back(key, scalar_text(v));
}

}  // namespace

Json classify_record(const PancakeState& input) {
    const PancakeState normalized = normalize_suffix(input);
    Json strip_list = Json::array();
    for (const Strip& s : strips(input)) {
        strip_list.push_back({{"start", s.start}, {"end", s.end}, {"direction", to_string(s.direction)}});
    }
    return Json{
        {"command", "classify"},
        {"input", format_permutation(input)},
        {"n", input.size()},
        {"normalized", format_permutation(normalized)},
        {"normalization_applied", !(normalized == input)},
        {"gaps", gap_count(input)},
        {"goal", is_goal(input)},
        {"locked", is_locked(input)},
        {"class", to_string(classify_state(normalized))},
        {"strips", strip_list},
        {"decreasing", flip_list(moves_of_class(input, MoveClass::Decreasing))},
        {"neutral", flip_list(moves_of_class(input, MoveClass::Neutral))},
        {"increasing", flip_list(moves_of_class(input, MoveClass::Increasing))},
    };
}

Json solve_record(const PancakeState& input, const SolveResult& result, bool optimal) {
    Json record{
        {"command", "solve"},
        {"input", format_permutation(input)},
        {"mode", optimal ? "optimal" : "greedy"},
        {"moves", flip_list(result.moves)},
        {"length", result.length},
        {"initial_gaps", result.initial_gap_count},
    };
    if (optimal) record["admissibility_margin"] = result.length - result.initial_gap_count;
    return record;
}

Json exit_distance_record(const PancakeState& input) {
    const PancakeState normalized = normalize_suffix(input);
    const PlateauPath path = plateau_exit_path(input);
    const EscapePlan plan = escape_plan(normalized);
    return Json{
        {"command", "exit-distance"},
        {"input", format_permutation(input)},
        {"normalized", format_permutation(normalized)},
        {"class", to_string(classify_state(normalized))},
        {"gaps", gap_count(input)},
        {"exit_distance", path.distance},
        {"plateau_path", flip_list(path.moves)},
        {"escape_plan", {{"moves_to_exit", flip_list(plan.moves_to_exit)}, {"closing_move", plan.closing_move.k}}},
        {"plan_matches_distance", static_cast<int>(plan.moves_to_exit.size()) == path.distance},
    };
}

Json report_record(const VerificationReport& report, const std::string& command, bool include_timing) {
    Json census = Json::object();
    for (const auto& [c, count] : report.class_census) census[std::string(to_string(c))] = count;
    Json histogram = Json::object();
    for (const auto& [d, count] : report.exit_distance_histogram) histogram[std::to_string(d)] = count;
    Json counts = Json::object();
    for (const auto& [name, count] : report.violation_counts) counts[name] = count;
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        violations.push_back({{"check", v.check}, {"state", v.state}, {"details", v.details}});
    }
    Json record{
        {"command", command},
        {"n", report.n},
        {"states_checked", report.states_checked},
        {"states_enumerated", report.states_enumerated},
        {"class_census", census},
        {"exit_distance_histogram", histogram},
        {"checks_run", report.checks_run},
        {"checks_skipped", report.checks_skipped},
        {"violation_total", report.total_violations()},
        {"violation_counts", counts},
        {"violations", violations},
        {"passed", report.passed()},
    };
    if (include_timing) record["elapsed_seconds"] = report.elapsed_seconds;
    return record;
}

std::vector<std::pair<std::string, std::string>> flatten(const Json& record) {
    std::vector<std::pair<std::string, std::string>> out;
    flatten_into(record, "", out);
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_record_csv(std::ostream& out, const Json& record) {
    const auto fields = flatten(record);
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i].first);
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i].second);
    out << '\n';
}

void write_record_human(std::ostream& out, const Json& record) {
    const auto fields = flatten(record);
    std::size_t width = 0;
    for (const auto& [k, v] : fields) width = std::max(width, k.size());
    for (const auto& [k, v] : fields) out << std::left << std::setw(static_cast<int>(width) + 2) << k + ":" << v << '\n';
}

void write_census_csv(std::ostream& out, const VerificationReport& report) {
    out << "n,class,count\n";
    for (const auto& [c, count] : report.class_census) out << report.n << ',' << to_string(c) << ',' << count << '\n';
}

void write_histogram_csv(std::ostream& out, const VerificationReport& report) {
    out << "n,exit_distance,count\n";
    for (const auto& [d, count] : report.exit_distance_histogram) out << report.n << ',' << d << ',' << count << '\n';
}

void write_report_human(std::ostream& out, const VerificationReport& report, bool include_timing) {
    out << "n = " << report.n << ": " << report.states_checked << " normalized states classified, "
        << report.states_enumerated << " states enumerated\n\n";
    out << "class          count\n";
    for (const auto& [c, count] : report.class_census) {
        out << std::left << std::setw(15) << to_string(c) << count << '\n';
    }
    out << "\nexit distance  count\n";
    for (const auto& [d, count] : report.exit_distance_histogram) {
        out << std::left << std::setw(15) << d << count << '\n';
    }
    if (!report.checks_run.empty()) {
        out << '\n' << report.checks_run.size() << " checks run";
        if (!report.checks_skipped.empty()) out << ", " << report.checks_skipped.size() << " skipped (oracle limit)";
        out << '\n';
    }
    if (report.passed()) {
        out << "violations: none\n";
    } else {
        out << "violations: " << report.total_violations() << '\n';
        for (const auto& [name, count] : report.violation_counts) out << "  " << name << ": " << count << '\n';
        for (const Violation& v : report.violations) {
            out << "  [" << v.check << "] " << v.state << ": " << v.details << '\n';
        }
    }
    if (include_timing) out << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed_seconds << " s\n";
}

}  // namespace gaptopo::io
