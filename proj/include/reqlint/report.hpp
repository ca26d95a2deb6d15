// ============================================================================
// report.hpp — analysis report assembly and rendering
// ============================================================================
//
// One AnalysisReport aggregates everything a CLI run produced: input
// identity, per-requirement parse status, the verdict with witness and
// engine statistics, and whichever optional sections (core, vacuity,
// connectivity) the subcommand filled in. The same struct renders to human
// text and to JSON; the JSON shape is frozen by report.schema.json at the
// repository root.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "reqlint/analyses.hpp"
#include "reqlint/engine.hpp"
#include "reqlint/trace.hpp"

namespace reqlint {

enum class ReportVerdict : std::uint8_t { Consistent, Inconsistent, Indeterminate, ParseError };

std::string verdict_name(ReportVerdict v);

// Exit code contract: 0 consistent (or no verdict), 1 inconsistent,
// 2 parse error, 3 indeterminate.
int verdict_exit_code(const std::optional<ReportVerdict>& v);

struct ParseEntry {
    std::string id;
    int line = 0;
    bool ok = false;
    std::string text;  // the sentence as written
    std::string error; // set when !ok
    std::string ltl;   // rendered translation when ok
};

struct MusSection {
    std::vector<std::string> ids;
    bool complete = true;
    std::size_t checks = 0;
};

struct VacuityEntry {
    std::string id;
    std::string trigger_text;
    VacuityStatus status = VacuityStatus::Indeterminate;
    std::optional<LassoTrace> witness;
};

struct AnalysisReport {
    std::string command;
    std::string input_path;
    std::string input_digest; // "fnv1a64:" + 16 hex digits over the input bytes
    std::vector<ParseEntry> requirements;
    std::vector<std::string> warnings;
    std::optional<ReportVerdict> verdict; // absent for graph/emit runs
    std::optional<LassoTrace> witness;
    std::optional<EngineStats> stats;
    std::optional<MusSection> mus;
    std::optional<std::vector<VacuityEntry>> vacuity;
    std::optional<std::vector<Component>> components;
    double wall_seconds = 0.0;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_string(std::string_view bytes);

nlohmann::json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report, bool color);

} // namespace reqlint
