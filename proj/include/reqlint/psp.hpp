// ============================================================================
// psp.hpp — property specification patterns: types and requirements parsing
// ============================================================================
//
// A requirements file is line-oriented:
//
//   ID : SENTENCE        # comment
//
// IDs match [A-Za-z0-9_.-]+ and must be unique. A sentence is a scope prefix
// followed by a pattern phrase; the trailing period is optional. Keywords are
// case-insensitive, identifiers are case-sensitive.
//
// Scopes:
//   Globally,
//   Before <d>,
//   After <d>,
//   Between <d> and <d>,
//   After <d> until <d>,
//
// Patterns (P, S, T are atom expressions; k is a positive integer):
//   it is always the case that <P> holds                          Universality
//   it is never the case that <P> holds                           Absence
//   <P> eventually holds                                          Existence
//   transitions to states in which <P> holds occur at most
//       <k> times                                                 BoundedExistence
//   it is always the case that if <P> holds, then <S>
//       eventually holds                                          Response
//   it is always the case that if <P> holds, then <S>
//       previously held                                           Precedence
//   it is always the case that if <P> holds, then <S>
//       eventually holds and is succeeded by <T>                  ResponseChain
//   it is always the case that if <P> holds, then <T> previously
//       held and was preceded by <S>                              PrecedenceChain
//
// Atom expressions combine boolean propositions and comparisons
// (`var < c`, `var <= c`, `var = c`, `var != c`, `var > c`, `var >= c`)
// with `and`, `or`, `not`, and parentheses; comparisons are desugared to
// {<, =} atoms at parse time. Scope delimiters <d> are single atoms, `not`
// atoms, or parenthesized expressions (parentheses disambiguate the `and` in
// "Between ... and ..."). Identifiers must not begin with two underscores
// (reserved for generated region propositions) and must not collide with
// sentence keywords.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqlint/formula.hpp"

namespace reqlint {

enum class ScopeKind : std::uint8_t { Globally, Before, After, Between, AfterUntil };

struct Scope {
    ScopeKind kind = ScopeKind::Globally;
    FormulaId q = kInvalidFormula; // Before/After: the delimiter; Between/AfterUntil: opener
    FormulaId r = kInvalidFormula; // Between/AfterUntil: closer
};

enum class PatternKind : std::uint8_t {
    Universality,
    Absence,
    Existence,
    BoundedExistence,
    Response,
    Precedence,
    ResponseChain,
    PrecedenceChain,
};

struct Pattern {
    PatternKind kind = PatternKind::Universality;
    FormulaId p = kInvalidFormula; // main payload (trigger for Response/Precedence/chains)
    FormulaId s = kInvalidFormula; // response / preceding event
    FormulaId t = kInvalidFormula; // chain tail
    int bound = 0;                 // BoundedExistence only, >= 1
};

struct PspInstance {
    Scope scope;
    Pattern pattern;
};

struct Requirement {
    std::string id;
    std::string source_text; // the sentence as written (trimmed, without the id)
    std::size_t line = 0;
    PspInstance psp;
};

struct RequirementSet {
    std::vector<Requirement> requirements;
};

// Name of the sentence grammar's trigger slot, if the pattern has one.
bool pattern_has_trigger(PatternKind kind);

// Strict parse of a whole requirements file: every line must parse, ids must
// be unique. Throws ParseError / DuplicateIdError.
RequirementSet parse_requirements(FormulaFactory& f, std::string_view text);

// Parse of a single sentence (no "ID :" prefix); line_no seeds error
// positions.
PspInstance parse_sentence(FormulaFactory& f, std::string_view sentence, std::size_t line_no = 1);

// Lenient whole-file parse for reporting: collects one entry per requirement
// line, each either parsed or carrying its error message.
struct ParsedLine {
    std::string id;           // empty if the id itself failed to parse
    std::string source_text;
    std::size_t line = 0;
    std::optional<Requirement> requirement; // set on success
    std::string error;                      // set on failure
};

struct ParsedFile {
    std::vector<ParsedLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.error.empty()) return false;
        return true;
    }
    RequirementSet to_set() const {
        RequirementSet set;
        for (const auto& l : lines)
            if (l.requirement) set.requirements.push_back(*l.requirement);
        return set;
    }
};

ParsedFile parse_requirements_lenient(FormulaFactory& f, std::string_view text);

// Canonical sentence for a parsed instance; parse_sentence(pretty_sentence(x))
// is structurally identical to x. (Comparisons print in the desugared {<, =}
// form, so sugar like >= does not survive a round trip, by design.)
std::string pretty_sentence(const FormulaFactory& f, const PspInstance& psp);

} // namespace reqlint
