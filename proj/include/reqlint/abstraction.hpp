// ============================================================================
// abstraction.hpp — region abstraction of numeric constraints
// ============================================================================
//
// Each numeric variable x with distinct constants c_1 < ... < c_k induces
// 2k+1 order regions:
//
//   r_0: x < c_1 | r_1: x = c_1 | r_2: c_1 < x < c_2 | ... | r_2k: x > c_k
//
// Each region becomes a fresh boolean proposition named __x__r<j> (the
// double-underscore prefix is rejected for user identifiers, so collisions
// are impossible). Constraint atoms rewrite to disjunctions of regions:
//
//   x < c_i  ->  r_0 | r_1 | ... | r_{2i-2}         x = c_i  ->  r_{2i-1}
//
// and the side condition q_m = G(exactly one region per variable) makes the
// boolean formula equisatisfiable with the constraint-level original. The
// satisfiability query downstream is the conjunction q_m & phi_prime.

#pragma once

#include <string>
#include <vector>

#include "reqlint/formula.hpp"
#include "reqlint/trace.hpp"

namespace reqlint {

// Constraint signature of a formula: which names are boolean propositions,
// which are numeric variables, and the distinct constants per variable.
struct Signature {
    std::vector<std::string> bool_props;          // sorted
    struct Variable {
        std::string name;
        std::vector<Rational> constants;          // sorted ascending, distinct
    };
    std::vector<Variable> variables;              // ordered by first occurrence in the formula
};

// Throws MixedUseError if a name occurs both as proposition and variable.
Signature extract_signature(const FormulaFactory& f, FormulaId id);

// Region bookkeeping for one variable.
struct VariableRegions {
    std::string var;
    std::vector<Rational> constants;              // c_1 < ... < c_k
    std::vector<std::string> region_props;        // 2k+1 names, index = region

    // Representative value of region j: c_1 - 1, exact constants, interval
    // midpoints, c_k + 1.
    Rational representative(std::size_t j) const;
};

struct AbstractionMap {
    std::vector<VariableRegions> variables;

    const VariableRegions* find(const std::string& var) const;
    std::size_t total_region_props() const;
};

struct AbstractionResult {
    FormulaId phi_prime = kInvalidFormula; // input with constraint atoms substituted
    FormulaId q_m = kInvalidFormula;       // G(exactly-one region per variable); G(true) if none
    AbstractionMap map;
};

// Builds the abstraction of `id`. Boolean-only input yields q_m = G(true)
// and phi_prime = id unchanged.
AbstractionResult build_abstraction(FormulaFactory& f, FormulaId id);

// Maps a propositional witness back to numeric values: for every state and
// variable, the unique active region picks the representative value. Throws
// NoActiveRegionError if a state does not have exactly one active region for
// some variable. The generated region propositions are consumed — the result
// speaks the original vocabulary only: user propositions plus numeric values.
LassoTrace concretize_witness(const LassoTrace& witness, const AbstractionMap& map);

} // namespace reqlint
