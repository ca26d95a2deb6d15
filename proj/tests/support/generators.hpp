// ============================================================================
// generators.hpp — seeded random inputs for the test suite
//
// Everything here is deterministic given the RNG state, so test runs are
// reproducible bit for bit. Generators produce formulas through a caller-
// supplied factory, traces as plain LassoTrace values, and requirement sets
// as fully formed Requirement records.
// ============================================================================
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reqlint/formula.hpp"
#include "reqlint/psp.hpp"
#include "reqlint/trace.hpp"

namespace reqlint::testgen {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
int pick_int(Rng& rng, int lo, int hi);

// ── formulas ────────────────────────────────────────────────────────────────

// Random formula in negation normal form over at most `max_props` of the
// proposition names "p", "q", "r", with at most `max_size` nodes. Leaves are
// literals (occasionally constants); operators are And/Or/X/F/G/U/R.
FormulaId random_nnf_formula(FormulaFactory& f, Rng& rng, int max_props, int max_size);

// Random formula with no normal-form restriction: negation and implication
// may appear anywhere. Used to exercise the NNF transformation.
FormulaId random_formula(FormulaFactory& f, Rng& rng, int max_props, int max_size);

// Random formula whose atoms mix boolean propositions with comparisons over
// at most `max_vars` numeric variables ("x", "y"), each drawing from a fixed
// pool of at most `max_consts` constants. Result is in negation normal form.
FormulaId random_constraint_formula(FormulaFactory& f, Rng& rng, int max_vars,
                                    int max_consts, int max_size);

// ── traces ──────────────────────────────────────────────────────────────────

// Random lasso over the given propositions: prefix length in [0, max_prefix],
// loop length in [1, max_loop], each state an independent coin flip per prop.
LassoTrace random_trace(Rng& rng, const std::vector<std::string>& props,
                        int max_prefix, int max_loop);

// ── requirements ────────────────────────────────────────────────────────────

// Random pattern instance over propositions from `atoms` (single props or
// small and/or/not combinations). All scopes and patterns are reachable.
PspInstance random_psp(FormulaFactory& f, Rng& rng, const std::vector<std::string>& atoms);

// Random requirement set of `n` entries with ids R1..Rn over a three-prop
// vocabulary, biased toward patterns that conflict easily (universality,
// absence, existence, response) so inconsistent sets show up at a useful
// rate.
RequirementSet random_requirement_set(FormulaFactory& f, Rng& rng, int n);

// Deterministic 100-requirement corpus over 30 variables (mixed boolean and
// numeric), returned as .req file text. Designed to be satisfiable and
// connected enough to exercise the engine at scale.
std::string large_corpus_text();

} // namespace reqlint::testgen
