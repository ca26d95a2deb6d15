// ============================================================================
// cli.cpp — command-line driver
// ============================================================================

#include "reqlint/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "reqlint/analyses.hpp"
#include "reqlint/catalog.hpp"
#include "reqlint/emit.hpp"
#include "reqlint/errors.hpp"
#include "reqlint/psp.hpp"
#include "reqlint/report.hpp"

namespace reqlint {

namespace {

struct Options {
    std::string command;
    std::string file;
    std::string json_path;
    std::size_t max_states = 1000000;
    double timeout = 60.0;
    bool no_connectivity = false;
    std::string format = "smv";
};

ReportVerdict from_sat(SatResult r) {
    switch (r) {
    case SatResult::Satisfiable:
        return ReportVerdict::Consistent;
    case SatResult::Unsatisfiable:
        return ReportVerdict::Inconsistent;
    case SatResult::Indeterminate:
        return ReportVerdict::Indeterminate;
    }
    return ReportVerdict::Indeterminate;
}

bool color_enabled() {
    const char* v = std::getenv("REQLINT_COLOR");
    return v != nullptr && std::string(v) == "1";
}

// Renders the report, writes the optional JSON file, and maps the verdict to
// the exit code. For `emit` the artifact itself goes to `out` instead of the
// human report.
int finalize(AnalysisReport& report, const Options& opt,
             std::chrono::steady_clock::time_point start, std::ostream& out,
             std::ostream& err, const std::string& emission) {
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opt.command == "emit")
        out << emission;
    else
        out << report_to_text(report, color_enabled());
    if (!opt.json_path.empty()) {
        std::ofstream jf(opt.json_path, std::ios::binary);
        if (!jf) {
            err << "reqlint: cannot write '" << opt.json_path << "'\n";
            return 2;
        }
        jf << report_to_json(report).dump(2) << "\n";
    }
    return verdict_exit_code(report.verdict);
}

int run_command(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();

    std::ifstream in(opt.file, std::ios::binary);
    if (!in) {
        err << "reqlint: cannot read '" << opt.file << "'\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    FormulaFactory f;
    AnalysisReport report;
    report.command = opt.command;
    report.input_path = opt.file;
    report.input_digest = digest_string(bytes);

    const ParsedFile parsed = parse_requirements_lenient(f, bytes);
    for (const ParsedLine& line : parsed.lines) {
        ParseEntry entry;
        entry.id = line.id;
        entry.line = static_cast<int>(line.line);
        entry.ok = line.requirement.has_value();
        entry.text = line.source_text;
        if (entry.ok)
            entry.ltl = to_text(f, psp_to_ltl(f, line.requirement->psp));
        else
            entry.error = line.error;
        report.requirements.push_back(std::move(entry));
    }

    if (!parsed.ok()) {
        report.verdict = ReportVerdict::ParseError;
        return finalize(report, opt, start, out, err, "");
    }

    const RequirementSet set = parsed.to_set();
    if (set.requirements.empty())
        report.warnings.push_back("empty requirement set");

    const EngineLimits limits{opt.max_states, opt.timeout};

    if (opt.command == "graph") {
        report.components = check_connectivity(f, set);
        return finalize(report, opt, start, out, err, "");
    }

    if (opt.command == "emit") {
        std::vector<FormulaId> parts;
        for (const Requirement& r : set.requirements)
            parts.push_back(psp_to_ltl(f, r.psp));
        AbstractionResult abs = build_abstraction(f, f.conj_all(parts));
        const EmitTarget target = opt.format == "smv" ? EmitTarget::Smv : EmitTarget::NeutralLtl;
        return finalize(report, opt, start, out, err, emit(f, abs, target));
    }

    // check / explain / vacuity all start from the consistency verdict.
    const ConsistencyOutcome cons = check_consistency(f, set, limits);
    report.verdict = from_sat(cons.verdict);
    report.witness = cons.witness;
    report.stats = cons.stats;

    if (opt.command == "explain" && cons.verdict == SatResult::Unsatisfiable) {
        const MusOutcome mus = explain_inconsistency(f, set, limits);
        report.mus = MusSection{mus.ids, mus.complete, mus.checks};
    }

    if (opt.command == "vacuity") {
        if (cons.verdict == SatResult::Satisfiable) {
            std::vector<VacuityEntry> entries;
            for (VacuityFinding& fd : check_vacuity(f, set, limits)) {
                VacuityEntry e;
                e.id = std::move(fd.id);
                e.trigger_text = to_text(f, fd.trigger);
                e.status = fd.status;
                e.witness = std::move(fd.witness);
                entries.push_back(std::move(e));
            }
            report.vacuity = std::move(entries);
        } else {
            report.warnings.push_back(
                "specification is not consistent; vacuity analysis skipped");
        }
    }

    if ((opt.command == "check" || opt.command == "explain") && !opt.no_connectivity) {
        report.components = check_connectivity(f, set);
        if (report.components->size() > 1) {
            report.warnings.push_back("requirements are disconnected (" +
                                      std::to_string(report.components->size()) +
                                      " components)");
        }
    }

    return finalize(report, opt, start, out, err, "");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"linter for pattern-based requirements with numerical constraints",
                 "reqlint"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool engine_flags) {
        sub->add_option("file", opt.file, "requirements file (.req)")->required();
        sub->add_option("--json", opt.json_path, "write the JSON report to this path");
        if (engine_flags) {
            sub->add_option("--max-states", opt.max_states, "engine state cap")
                ->capture_default_str();
            sub->add_option("--timeout", opt.timeout, "engine time cap in seconds")
                ->capture_default_str();
        }
    };

    CLI::App* check = app.add_subcommand("check", "decide joint consistency");
    add_common(check, true);
    check->add_flag("--no-connectivity", opt.no_connectivity,
                    "skip the connected-components warning pass");

    CLI::App* explain =
        app.add_subcommand("explain", "check plus a minimal inconsistent core");
    add_common(explain, true);
    explain->add_flag("--no-connectivity", opt.no_connectivity,
                      "skip the connected-components warning pass");

    CLI::App* vacuity =
        app.add_subcommand("vacuity", "check plus trigger-reachability findings");
    add_common(vacuity, true);

    CLI::App* graph = app.add_subcommand("graph", "connected components of the"
                                                  " shared-name graph");
    add_common(graph, false);

    CLI::App* emit_cmd =
        app.add_subcommand("emit", "serialize the abstracted problem");
    add_common(emit_cmd, false);
    emit_cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"smv", "ltl"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    opt.command = app.get_subcommands().front()->get_name();
    try {
        return run_command(opt, out, err);
    } catch (const Error& e) {
        err << "reqlint: " << e.what() << "\n";
        return 2;
    }
}

} // namespace reqlint
