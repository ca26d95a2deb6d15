// ============================================================================
// analyses.hpp — requirement-set analyses
// ============================================================================
//
// The four analyses offered over a parsed requirement set:
//
//  * check_consistency — translate every requirement, conjoin, abstract, and
//    decide; a satisfiable verdict carries a concretized witness lasso.
//  * explain_inconsistency — deletion-based minimal inconsistent core: walk
//    the requirements in file order and drop each one whose removal keeps
//    the set inconsistent. The result is minimal (irreducible), which need
//    not be of minimum cardinality.
//  * check_vacuity — for every requirement whose pattern has a trigger, ask
//    whether the trigger can occur at all under the conjoined specification;
//    an unreachable trigger means the requirement is satisfied vacuously.
//  * check_connectivity — connected components of the graph whose vertices
//    are requirements and whose edges join requirements sharing a name
//    (boolean proposition or numeric variable); more than one component
//    usually signals a typo or a forgotten coupling requirement.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reqlint/abstraction.hpp"
#include "reqlint/engine.hpp"
#include "reqlint/formula.hpp"
#include "reqlint/psp.hpp"
#include "reqlint/trace.hpp"

namespace reqlint {

// ── consistency ─────────────────────────────────────────────────────────────

struct ConsistencyOutcome {
    SatResult verdict = SatResult::Indeterminate;
    std::optional<LassoTrace> witness; // concretized; present iff Satisfiable
    EngineStats stats;
    std::vector<FormulaId> translations; // aligned with set.requirements
    AbstractionResult abstraction;       // over the full conjunction
};

// Translates, abstracts, and decides the conjunction of the whole set. The
// empty set is satisfiable by convention (empty conjunction).
ConsistencyOutcome check_consistency(FormulaFactory& f, const RequirementSet& set,
                                     const EngineLimits& limits = {});

// ── minimal inconsistent core ───────────────────────────────────────────────

struct MusOutcome {
    std::vector<std::string> ids; // file order
    bool complete = true;  // false: a resource cap interrupted the deletion loop
    std::size_t checks = 0; // number of engine runs performed
};

// Deletion-based core extraction; call only on an inconsistent set. Walks
// requirements in file order, dropping r_i whenever the working set minus
// r_i is still inconsistent. When `complete`, the result is inconsistent and
// every single removal from it is consistent; an indeterminate inner check
// stops the loop early and leaves `complete` false.
MusOutcome explain_inconsistency(FormulaFactory& f, const RequirementSet& set,
                                 const EngineLimits& limits = {});

// ── vacuity ─────────────────────────────────────────────────────────────────

enum class VacuityStatus : std::uint8_t { Vacuous, NonVacuous, Indeterminate };

struct VacuityFinding {
    std::string id;
    FormulaId trigger = kInvalidFormula; // original trigger expression
    VacuityStatus status = VacuityStatus::Indeterminate;
    std::optional<LassoTrace> witness; // concretized; present iff NonVacuous
};

// For each requirement whose pattern has a trigger slot, decides whether the
// conjoined specification admits a model in which the trigger occurs. Call
// only on a consistent set: under an inconsistent conjunction every trigger
// is trivially unreachable and the notion degenerates.
std::vector<VacuityFinding> check_vacuity(FormulaFactory& f, const RequirementSet& set,
                                          const EngineLimits& limits = {});

// ── connectivity ────────────────────────────────────────────────────────────

struct DependencyGraph {
    std::vector<std::string> vertices; // requirement ids, file order
    std::vector<std::pair<std::string, std::string>> edges; // i < j by file order
};

// One vertex per requirement; an edge whenever two requirements mention a
// common name, boolean or numeric.
DependencyGraph build_dependency_graph(FormulaFactory& f, const RequirementSet& set);

struct Component {
    std::vector<std::string> ids; // sorted lexicographically
    bool flagged = false;         // member of the smallest-size tier when split
};

// Connected components, sorted by size ascending then by smallest member id.
// When the graph splits into more than one component, every component of
// minimum size is flagged.
std::vector<Component> check_connectivity(FormulaFactory& f, const RequirementSet& set);

} // namespace reqlint
