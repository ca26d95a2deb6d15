// ============================================================================
// test_cli.cpp — the in-process driver against the sample corpus
// ============================================================================
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "reqlint/cli.hpp"
#include "reqlint/ltl_parser.hpp"
#include "reqlint/report.hpp"
#include "support/schema_check.hpp"

using namespace reqlint;
using reqlint::testgen::schema_violations;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"reqlint"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string corpus(const std::string& name) {
    return std::string(REQLINT_SOURCE_DIR) + "/corpus/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size()))
        ++n;
    return n;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_json_path(const std::string& tag) {
    return (std::filesystem::temp_directory_path() / ("reqlint_test_" + tag + ".json"))
        .string();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("check on a consistent file exits zero with a witness") {
    CliResult r = cli({"check", corpus("arm.req")});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "1 requirement"));
    CHECK(contains(r.out, "R1  line 2  ok      G (proximity_sensor < 20 -> F arm_idle)"));
    CHECK(contains(r.out, "verdict: CONSISTENT"));
    CHECK(contains(r.out, "witness:"));
    CHECK(contains(r.out, "prefix[0]:"));
    CHECK(contains(r.out, "proximity_sensor="));
    // Region bookkeeping stays internal to the engine.
    CHECK(!contains(r.out, "__proximity_sensor__"));
}

TEST_CASE("check on an inconsistent pair exits one") {
    CliResult r = cli({"check", corpus("conflict.req")});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "verdict: INCONSISTENT"));
    CHECK(!contains(r.out, "witness:"));
}

TEST_CASE("explain adds the minimal core on inconsistent input") {
    CliResult r = cli({"explain", corpus("conflict.req")});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "minimal inconsistent core (2 of 2): R1 R2"));
}

TEST_CASE("explain on a consistent file prints no core") {
    CliResult r = cli({"explain", corpus("arm.req")});
    CHECK(r.code == 0);
    CHECK(!contains(r.out, "minimal inconsistent core"));
}

TEST_CASE("vacuity reports an unreachable trigger") {
    CliResult r = cli({"vacuity", corpus("vacuous.req")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "vacuity:"));
    CHECK(contains(r.out, "R1: VACUOUS  (trigger msg)"));
}

TEST_CASE("vacuity is skipped on inconsistent input") {
    CliResult r = cli({"vacuity", corpus("conflict.req")});
    CHECK(r.code == 1);
    CHECK(contains(r.out,
                   "warning: specification is not consistent; vacuity analysis skipped"));
    CHECK(!contains(r.out, "vacuity:"));
}

TEST_CASE("graph lists components without taking a verdict") {
    CliResult r = cli({"graph", corpus("typo.req")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "connectivity: 2 components"));
    CHECK(count_of(r.out, "[flagged]") == 2);
    CHECK(!contains(r.out, "verdict:"));

    CliResult single = cli({"graph", corpus("arm.req")});
    CHECK(single.code == 0);
    CHECK(contains(single.out, "connectivity: 1 component\n"));
    CHECK(!contains(single.out, "[flagged]"));
}

TEST_CASE("check warns about disconnected requirements") {
    CliResult r = cli({"check", corpus("typo.req")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "warning: requirements are disconnected (2 components)"));
    CHECK(contains(r.out, "connectivity: 2 components"));

    CliResult quiet = cli({"check", corpus("typo.req"), "--no-connectivity"});
    CHECK(quiet.code == 0);
    CHECK(!contains(quiet.out, "disconnected"));
    CHECK(!contains(quiet.out, "connectivity:"));
}

TEST_CASE("an empty requirement set is consistent but flagged") {
    CliResult r = cli({"check", corpus("empty.req")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "0 requirements"));
    CHECK(contains(r.out, "warning: empty requirement set"));
    CHECK(contains(r.out, "verdict: CONSISTENT"));
}

TEST_CASE("parse errors exit two with per-line diagnostics") {
    CliResult r = cli({"check", corpus("mixed.req")});
    CHECK(r.code == 2);
    CHECK(contains(r.out, "4 requirements, 2 parse errors"));
    CHECK(contains(r.out, "R1  line 2  ok      G temperature < 100"));
    CHECK(contains(r.out, "R2  line 3  error"));
    CHECK(contains(r.out, "expected 'eventually', found 'widget'"));
    CHECK(contains(r.out, "duplicate requirement id 'R1' at line 5"));
    CHECK(contains(r.out, "verdict: PARSE_ERROR"));
    // No analysis runs on a file that does not parse.
    CHECK(!contains(r.out, "witness:"));
    CHECK(!contains(r.out, "engine:"));
}

TEST_CASE("emit writes the abstracted problem to standard output") {
    CliResult ltl = cli({"emit", corpus("arm.req"), "--format", "ltl"});
    CHECK(ltl.code == 0);
    std::vector<std::string> lines;
    std::istringstream in(ltl.out);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    REQUIRE(lines.size() == 2);
    // Both lines reparse in the neutral syntax.
    FormulaFactory f;
    CHECK_NOTHROW(parse_ltl(f, lines[0]));
    CHECK_NOTHROW(parse_ltl(f, lines[1]));
    CHECK(contains(lines[0], "__proximity_sensor__r0"));
    CHECK(lines[1] == "G (__proximity_sensor__r0 -> F arm_idle)");

    CliResult smv = cli({"emit", corpus("arm.req"), "--format", "smv"});
    CHECK(smv.code == 0);
    CHECK(contains(smv.out, "MODULE main"));
    CHECK(contains(smv.out, "__proximity_sensor__r0 : boolean;"));
    CHECK(contains(smv.out, "LTLSPEC !("));

    // smv is the default format.
    CliResult dflt = cli({"emit", corpus("arm.req")});
    CHECK(dflt.out == smv.out);
}

TEST_CASE("json reports validate against the schema for every subcommand") {
    nlohmann::json schema;
    {
        std::ifstream in(std::string(REQLINT_SOURCE_DIR) + "/report.schema.json");
        REQUIRE(in.good());
        schema = nlohmann::json::parse(in);
    }
    const std::vector<std::pair<std::string, std::string>> runs = {
        {"check", "arm.req"},     {"explain", "conflict.req"}, {"vacuity", "vacuous.req"},
        {"graph", "typo.req"},    {"emit", "arm.req"},         {"check", "mixed.req"},
    };
    for (const auto& [cmd, file] : runs) {
        CAPTURE(cmd);
        CAPTURE(file);
        const std::string path = temp_json_path(cmd + "_" + file);
        CliResult r = cli({cmd, corpus(file), "--json", path});
        nlohmann::json j = nlohmann::json::parse(slurp(path));
        CHECK(schema_violations(schema, j).empty());
        CHECK(j["tool"]["name"] == "reqlint");
        CHECK(j["command"] == cmd);
        CHECK(j["input"]["digest"] == digest_string(slurp(corpus(file))));
        std::filesystem::remove(path);
    }
}

TEST_CASE("usage errors exit two") {
    CHECK(cli({"frobnicate", corpus("arm.req")}).code == 2);
    CHECK(cli({"check"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"emit", corpus("arm.req"), "--format", "yaml"}).code == 2);

    CliResult missing = cli({"check", corpus("no_such_file.req")});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot read"));

    CliResult unwritable = cli({"check", corpus("arm.req"), "--json",
                                "/nonexistent_dir/report.json"});
    CHECK(unwritable.code == 2);
    CHECK(contains(unwritable.err, "cannot write"));
}

TEST_CASE("resource caps exit three with the limit named") {
    CliResult t = cli({"check", corpus("arm.req"), "--timeout", "0"});
    CHECK(t.code == 3);
    CHECK(contains(t.out, "verdict: INDETERMINATE"));
    CHECK(contains(t.out, "limit hit: time"));

    CliResult s = cli({"check", corpus("arm.req"), "--max-states", "1"});
    CHECK(s.code == 3);
    CHECK(contains(s.out, "limit hit: states"));
}

TEST_CASE("color output follows the environment toggle") {
    CliResult plain = cli({"check", corpus("arm.req")});
    CHECK(!contains(plain.out, "\033["));

    setenv("REQLINT_COLOR", "1", 1);
    CliResult colored = cli({"check", corpus("arm.req")});
    unsetenv("REQLINT_COLOR");
    CHECK(contains(colored.out, "\033[32mCONSISTENT\033[0m"));
}

} // TEST_SUITE("cli")
