// ============================================================================
// trace.hpp — ultimately periodic traces and reference LTL evaluation
// ============================================================================
//
// A LassoTrace denotes the infinite word prefix . loop^omega. States assign
// boolean propositions and (optionally) exact rational values to numeric
// variables, so the same evaluator serves both the propositional engine
// (witness re-checking) and the constraint-level test oracles.
//
// eval_on_lasso is deliberately the simplest correct implementation: each
// subformula is evaluated at every position with a fixpoint over the loop.
// It is the semantic reference the satisfiability engine is audited against,
// so it must stay independent of the engine.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "reqlint/formula.hpp"
#include "reqlint/rational.hpp"

namespace reqlint {

struct TraceState {
    std::map<std::string, bool> props;
    std::map<std::string, Rational> values;
};

struct LassoTrace {
    std::vector<TraceState> prefix; // may be empty
    std::vector<TraceState> loop;   // must be non-empty
};

// Truth of the formula at position 0 of the infinite word. Throws
// UncoveredPropositionError if a state misses a proposition or numeric
// variable the formula mentions; throws Error on an empty loop.
// Handles arbitrary formulas (NNF not required).
bool eval_on_lasso(const FormulaFactory& f, FormulaId id, const LassoTrace& trace);

} // namespace reqlint
