// ============================================================================
// report.cpp — analysis report assembly and rendering
// ============================================================================

#include "reqlint/report.hpp"

#include <sstream>

#include "reqlint/version.hpp"

namespace reqlint {

namespace {

const char* kReset = "\033[0m";
const char* kGreen = "\033[32m";
const char* kRed = "\033[31m";
const char* kYellow = "\033[33m";

std::string paint(bool color, const char* code, const std::string& s) {
    if (!color)
        return s;
    return std::string(code) + s + kReset;
}

const char* verdict_color(ReportVerdict v) {
    switch (v) {
    case ReportVerdict::Consistent:
        return kGreen;
    case ReportVerdict::Inconsistent:
    case ReportVerdict::ParseError:
        return kRed;
    case ReportVerdict::Indeterminate:
        return kYellow;
    }
    return kReset;
}

std::string vacuity_status_name(VacuityStatus s) {
    switch (s) {
    case VacuityStatus::Vacuous:
        return "VACUOUS";
    case VacuityStatus::NonVacuous:
        return "NON_VACUOUS";
    case VacuityStatus::Indeterminate:
        return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

std::string state_line(const TraceState& s, bool hide_internal) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : s.props) {
        if (hide_internal && name.rfind("__", 0) == 0)
            continue;
        os << (first ? "" : " ") << name << "=" << (value ? "1" : "0");
        first = false;
    }
    for (const auto& [name, value] : s.values) {
        os << (first ? "" : " ") << name << "=" << value.to_decimal_string();
        first = false;
    }
    if (first)
        os << "(empty)";
    return os.str();
}

nlohmann::json state_to_json(const TraceState& s) {
    nlohmann::json j;
    j["props"] = nlohmann::json::object();
    for (const auto& [name, value] : s.props)
        j["props"][name] = value;
    j["values"] = nlohmann::json::object();
    for (const auto& [name, value] : s.values)
        j["values"][name] = value.to_decimal_string();
    return j;
}

nlohmann::json trace_to_json(const LassoTrace& t) {
    nlohmann::json j;
    j["prefix"] = nlohmann::json::array();
    for (const TraceState& s : t.prefix)
        j["prefix"].push_back(state_to_json(s));
    j["loop"] = nlohmann::json::array();
    for (const TraceState& s : t.loop)
        j["loop"].push_back(state_to_json(s));
    return j;
}

nlohmann::json stats_to_json(const EngineStats& s) {
    nlohmann::json j;
    j["states_explored"] = s.states_explored;
    j["scc_count"] = s.scc_count;
    j["wall_seconds"] = s.wall_seconds;
    j["limit_hit"] = s.limit_hit;
    return j;
}

} // namespace

std::string verdict_name(ReportVerdict v) {
    switch (v) {
    case ReportVerdict::Consistent:
        return "CONSISTENT";
    case ReportVerdict::Inconsistent:
        return "INCONSISTENT";
    case ReportVerdict::Indeterminate:
        return "INDETERMINATE";
    case ReportVerdict::ParseError:
        return "PARSE_ERROR";
    }
    return "INDETERMINATE";
}

int verdict_exit_code(const std::optional<ReportVerdict>& v) {
    if (!v)
        return 0;
    switch (*v) {
    case ReportVerdict::Consistent:
        return 0;
    case ReportVerdict::Inconsistent:
        return 1;
    case ReportVerdict::ParseError:
        return 2;
    case ReportVerdict::Indeterminate:
        return 3;
    }
    return 3;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_string(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4)
        out += hex[(h >> shift) & 0xf];
    return out;
}

nlohmann::json report_to_json(const AnalysisReport& report) {
    nlohmann::json j;
    j["tool"] = {{"name", kToolName}, {"version", kVersion}};
    j["command"] = report.command;
    j["input"] = {{"path", report.input_path}, {"digest", report.input_digest}};

    j["requirements"] = nlohmann::json::array();
    for (const ParseEntry& e : report.requirements) {
        nlohmann::json r;
        r["id"] = e.id;
        r["line"] = e.line;
        r["status"] = e.ok ? "ok" : "error";
        r["text"] = e.text;
        if (e.ok)
            r["ltl"] = e.ltl;
        else
            r["error"] = e.error;
        j["requirements"].push_back(std::move(r));
    }

    j["warnings"] = report.warnings;
    if (report.verdict)
        j["verdict"] = verdict_name(*report.verdict);
    if (report.witness)
        j["witness"] = trace_to_json(*report.witness);
    if (report.stats)
        j["engine"] = stats_to_json(*report.stats);
    if (report.mus) {
        j["mus"] = {{"ids", report.mus->ids},
                    {"complete", report.mus->complete},
                    {"checks", report.mus->checks}};
    }
    if (report.vacuity) {
        j["vacuity"] = nlohmann::json::array();
        for (const VacuityEntry& e : *report.vacuity) {
            nlohmann::json v;
            v["id"] = e.id;
            v["trigger"] = e.trigger_text;
            v["status"] = vacuity_status_name(e.status);
            if (e.witness)
                v["witness"] = trace_to_json(*e.witness);
            j["vacuity"].push_back(std::move(v));
        }
    }
    if (report.components) {
        j["connectivity"] = nlohmann::json::array();
        for (const Component& c : *report.components)
            j["connectivity"].push_back({{"ids", c.ids}, {"flagged", c.flagged}});
    }
    j["wall_seconds"] = report.wall_seconds;
    return j;
}

std::string report_to_text(const AnalysisReport& report, bool color) {
    std::ostringstream os;
    std::size_t errors = 0;
    for (const ParseEntry& e : report.requirements)
        if (!e.ok)
            ++errors;

    os << report.input_path << ": " << report.requirements.size() << " requirement"
       << (report.requirements.size() == 1 ? "" : "s");
    if (errors > 0)
        os << ", " << paint(color, kRed, std::to_string(errors) + " parse error" +
                                             (errors == 1 ? "" : "s"));
    os << "\n";

    for (const ParseEntry& e : report.requirements) {
        os << "  " << e.id << "  line " << e.line << "  ";
        if (e.ok)
            os << "ok      " << e.ltl << "\n";
        else
            os << paint(color, kRed, "error") << "   " << e.error << "\n";
    }

    for (const std::string& w : report.warnings)
        os << paint(color, kYellow, "warning") << ": " << w << "\n";

    if (report.verdict) {
        os << "verdict: "
           << paint(color, verdict_color(*report.verdict), verdict_name(*report.verdict))
           << "\n";
    }

    if (report.witness) {
        os << "witness:\n";
        for (std::size_t i = 0; i < report.witness->prefix.size(); ++i)
            os << "  prefix[" << i << "]: " << state_line(report.witness->prefix[i], true)
               << "\n";
        for (std::size_t i = 0; i < report.witness->loop.size(); ++i)
            os << "  loop[" << i << "]:   " << state_line(report.witness->loop[i], true)
               << "\n";
    }

    if (report.mus) {
        os << "minimal inconsistent core (" << report.mus->ids.size() << " of "
           << report.requirements.size() << "):";
        for (const std::string& id : report.mus->ids)
            os << " " << id;
        if (!report.mus->complete)
            os << "  " << paint(color, kYellow, "(incomplete: resource cap hit)");
        os << "\n";
    }

    if (report.vacuity) {
        if (report.vacuity->empty()) {
            os << "vacuity: no requirement has a trigger\n";
        } else {
            os << "vacuity:\n";
            for (const VacuityEntry& e : *report.vacuity) {
                const char* code = e.status == VacuityStatus::Vacuous     ? kYellow
                                   : e.status == VacuityStatus::NonVacuous ? kGreen
                                                                           : kYellow;
                os << "  " << e.id << ": " << paint(color, code, vacuity_status_name(e.status))
                   << "  (trigger " << e.trigger_text << ")\n";
            }
        }
    }

    if (report.components) {
        os << "connectivity: " << report.components->size() << " component"
           << (report.components->size() == 1 ? "" : "s") << "\n";
        for (const Component& c : *report.components) {
            os << "  ";
            if (c.flagged)
                os << paint(color, kRed, "[flagged] ");
            bool first = true;
            for (const std::string& id : c.ids) {
                os << (first ? "" : ", ") << id;
                first = false;
            }
            os << "  (size " << c.ids.size() << ")\n";
        }
    }

    if (report.stats) {
        os << "engine: " << report.stats->states_explored << " state"
           << (report.stats->states_explored == 1 ? "" : "s") << ", "
           << report.stats->scc_count << " SCC"
           << (report.stats->scc_count == 1 ? "" : "s");
        if (!report.stats->limit_hit.empty())
            os << ", " << paint(color, kYellow, "limit hit: " + report.stats->limit_hit);
        os << "\n";
    }
    return os.str();
}

} // namespace reqlint
