#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gaptopo/solver.hpp"
#include "gaptopo/topology.hpp"
#include "gaptopo/verify.hpp"

namespace gaptopo::io {

using Json = nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

// Output records. JSON is the canonical encoding; CSV and human text are
// derived from it by flatten().
Json classify_record(const PancakeState& input);
Json solve_record(const PancakeState& input, const SolveResult& result, bool optimal);
Json exit_distance_record(const PancakeState& input);

/// `include_timing` adds elapsed_seconds, which makes the output
/// run-dependent.
Json report_record(const VerificationReport& report, const std::string& command, bool include_timing);

/// One (key, text) pair per leaf. Nested objects use dotted keys, arrays of
/// scalars are space-joined, arrays of objects render each element as its
/// values joined by ':'.
std::vector<std::pair<std::string, std::string>> flatten(const Json& record);

std::string csv_escape(const std::string& field);

/// Header line plus one data line.
void write_record_csv(std::ostream& out, const Json& record);
void write_record_human(std::ostream& out, const Json& record);

/// `n,class,count` rows.
void write_census_csv(std::ostream& out, const VerificationReport& report);
/// `n,exit_distance,count` rows.
void write_histogram_csv(std::ostream& out, const VerificationReport& report);
void write_report_human(std::ostream& out, const VerificationReport& report, bool include_timing);

}  // namespace gaptopo::io
