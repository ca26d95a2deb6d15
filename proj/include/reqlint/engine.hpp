// ============================================================================
// engine.hpp — tableau-based LTL satisfiability
// ============================================================================
//
// Decides satisfiability of propositional LTL by building (on the fly) the
// tableau graph of saturated formula sets and searching it for a reachable
// fair cycle:
//
//  * A state is a locally saturated, contradiction-free subset of the
//    closure of the NNF input; state identity is the formula set itself.
//  * The successor seed of a state is derived canonically: arguments of X,
//    plus every Until/Eventually not fulfilled in the state, plus every
//    Globally, plus every Release whose left argument is absent.
//  * Acceptance is generalized Buechi with one fairness set per Until and
//    per Eventually in the closure: states where the right argument holds or
//    the obligation is absent.
//  * Emptiness is checked with an iterative Tarjan SCC pass over the lazily
//    expanded graph; the first accepting SCC that closes yields a witness
//    lasso (path to the SCC plus a cycle stitched through all fairness sets
//    in round-robin order).
//
// Every satisfiable verdict is re-checked against eval_on_lasso before it is
// returned; a failed re-check is an internal error, never a wrong answer.
// Resource caps (state count, wall time) yield INDETERMINATE, never a guess.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reqlint/abstraction.hpp"
#include "reqlint/formula.hpp"
#include "reqlint/trace.hpp"

namespace reqlint {

struct EngineLimits {
    std::size_t max_states = 1000000;
    double timeout_seconds = 60.0;
};

enum class SatResult : std::uint8_t { Satisfiable, Unsatisfiable, Indeterminate };

struct EngineStats {
    std::size_t states_explored = 0;
    std::size_t scc_count = 0;
    double wall_seconds = 0.0;
    std::string limit_hit; // "states" or "time" when result is Indeterminate
};

struct SatVerdict {
    SatResult result = SatResult::Indeterminate;
    std::optional<LassoTrace> witness; // present iff result == Satisfiable
    EngineStats stats;
};

// Decides satisfiability of a boolean-atom formula (numeric constraints must
// be abstracted away first; a Cmp atom is an error). The input need not be
// in NNF; it is normalized internally, and the witness is verified against
// the formula as given.
SatVerdict check_sat(FormulaFactory& f, FormulaId id, const EngineLimits& limits = {});

// Repeated consistency checks over subsets of one requirement set, as used
// by the deletion-based core extraction: translations are supplied once,
// each check conjoins the non-excluded ones (by index) and recomputes the
// abstraction for the reduced signature.
class IncrementalChecker {
public:
    IncrementalChecker(FormulaFactory& f, std::vector<FormulaId> translations,
                       EngineLimits limits = {});

    // Checks the conjunction of all translations whose index is not in
    // `excluded` (sorted or not, duplicates ignored), plus optional extra
    // conjuncts. The abstraction is rebuilt over the whole reduced
    // conjunction including the extras, so their constraint atoms share the
    // region map; it is returned through `abs_out` when non-null (e.g. to
    // concretize a witness).
    SatVerdict check(const std::vector<std::size_t>& excluded,
                     const std::vector<FormulaId>& extra = {},
                     AbstractionResult* abs_out = nullptr) const;

    std::size_t size() const { return translations_.size(); }

private:
    FormulaFactory& f_;
    std::vector<FormulaId> translations_;
    EngineLimits limits_;
};

} // namespace reqlint
