// ============================================================================
// catalog.hpp — (scope, pattern) -> LTL mapping
// ============================================================================
//
// The mapping follows the classical specification-pattern catalog; the full
// table (all 8 patterns x 5 scopes) is written out in docs/pattern_catalog.md
// and frozen by a golden test. Deliberate choices, both validated against the
// window-semantics oracle in the test suite:
//
//  * After-scope mappings for Precedence / PrecedenceChain pin the *first*
//    occurrence of the opening delimiter (G !q | (!q U (q & core))); the
//    published <>(q & core) shape can be rescued by a later occurrence.
//  * BoundedExistence generalizes the published k=2 nesting to any k >= 1 by
//    structural recursion (weak-until variants inside open-ended scopes).
//
// Emitted formulas use only {atoms, !, &, |, ->, X, F, G, U}; weak until
// appears as the sugar (a U b) | G a.

#pragma once

#include "reqlint/formula.hpp"
#include "reqlint/psp.hpp"

namespace reqlint {

// Translates one requirement to LTL. Throws UnsupportedCombinationError for
// a (scope, pattern) pair outside the table (defensive; the table is total).
FormulaId psp_to_ltl(FormulaFactory& f, const PspInstance& psp);

// Left-fold conjunction of all requirement translations, in file order:
// ((phi_1 & phi_2) & phi_3) ... Exactly n-1 And nodes for n requirements;
// the empty set conjoins to `true`.
FormulaId conjoin(FormulaFactory& f, const std::vector<FormulaId>& translations);

} // namespace reqlint
