#pragma once

// Report construction: the versioned JSON schema and the text rendering
// shared by the CLI commands. Re-running a tool with a report's echoed
// spec reproduces identical series fields; JSON objects serialize with
// sorted keys, so byte-identical runs give byte-identical documents
// (elapsed_ms fields are the only wall-clock-dependent values).

#include <string>

#include <nlohmann/json.hpp>

#include "genform/engine.hpp"

namespace genform {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::json;

json spec_to_json(const JobSpec& spec);

// Parses a spec echo; unknown fields are ignored. Throws
// std::invalid_argument on missing/malformed required fields.
JobSpec spec_from_json(const json& j);

json series_to_json(const IntSeries& s);
IntSeries series_from_json(const json& j);

// Report for compute/verify (one spec, one verdict).
json run_report(const std::string& command, const JobSpec& spec,
                const Verdict& verdict, double elapsed_ms);

json compare_report(const CompareReport& report, double elapsed_ms);

// Array of run reports, one per sweep row; each row carries the summed
// elapsed time of its own trials.
json sweep_report(const JobSpec& base_spec, const std::vector<SweepRow>& rows);

std::string render_run_text(const std::string& command, const JobSpec& spec,
                            const Verdict& verdict);
std::string render_compare_text(const CompareReport& report);
std::string render_sweep_text(const JobSpec& base_spec,
                              const std::vector<SweepRow>& rows);

// Removes every "elapsed_ms" field, recursively; used when comparing
// reports for byte-identity.
void strip_timing(json& j);

} // namespace genform
