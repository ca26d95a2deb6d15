// ============================================================================
// emit.hpp — serialization of abstracted problems for external checkers
// ============================================================================
//
// Two targets:
//
//  * NEUTRAL_LTL — the library's own textual syntax, two lines: the region
//    discipline first, the abstracted formula second. parse(emit(x)) is
//    structurally identical to x.
//  * SMV — a `MODULE main` declaring every proposition as an unconstrained
//    boolean plus `LTLSPEC !(<discipline & formula>)`: a counterexample to
//    that spec is exactly a satisfying trace of the conjunction.
//
// Both emissions are deterministic: identical input yields byte-identical
// output. Files use LF line endings.

#pragma once

#include <string>

#include "reqlint/abstraction.hpp"
#include "reqlint/formula.hpp"

namespace reqlint {

enum class EmitTarget : std::uint8_t { Smv, NeutralLtl };

std::string emit_neutral(const FormulaFactory& f, const AbstractionResult& problem);
std::string emit_smv(const FormulaFactory& f, const AbstractionResult& problem);
std::string emit(const FormulaFactory& f, const AbstractionResult& problem, EmitTarget target);

} // namespace reqlint
