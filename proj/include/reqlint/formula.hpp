// ============================================================================
// formula.hpp — interned LTL formula DAG
// ============================================================================
//
// Formulas are immutable nodes owned by a FormulaFactory and addressed by
// integer handles. Structurally identical nodes are interned to the same id,
// so sets of formulas (tableau states, closures) hash and compare as cheap
// integer sets, and structural equality is id equality within one factory.
//
// Atoms come in two flavors: boolean propositions and numeric constraints
// `var < c` / `var = c` with an exact rational constant. The frontend only
// ever builds {atoms, !, &, |, ->, X, F, G, U}; Release exists as the
// negation-normal-form dual of Until.

#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "reqlint/rational.hpp"

namespace reqlint {

using FormulaId = std::uint32_t;
inline constexpr FormulaId kInvalidFormula = static_cast<FormulaId>(-1);

enum class NodeKind : std::uint8_t {
    True,
    False,
    Prop,    // boolean proposition, carries name
    Cmp,     // numeric constraint, carries name, rel, constant
    Not,
    And,
    Or,
    Implies,
    Next,
    Eventually,
    Globally,
    Until,
    Release,
};

enum class CmpRel : std::uint8_t { Lt, Eq };

struct FormulaNode {
    NodeKind kind = NodeKind::True;
    std::string name;                       // Prop / Cmp only
    CmpRel rel = CmpRel::Lt;                // Cmp only
    Rational constant;                      // Cmp only
    std::array<FormulaId, 2> child = {kInvalidFormula, kInvalidFormula};

    bool operator==(const FormulaNode& other) const {
        return kind == other.kind && child == other.child && name == other.name &&
               rel == other.rel && constant == other.constant;
    }
};

struct FormulaNodeHash {
    std::size_t operator()(const FormulaNode& n) const {
        std::size_t h = std::hash<std::uint8_t>{}(static_cast<std::uint8_t>(n.kind));
        const auto mix = [&h](std::size_t v) {
            h ^= v + 0x9e3779b9 + (h << 6) + (h >> 2);
        };
        mix(std::hash<std::string>{}(n.name));
        mix(std::hash<std::uint8_t>{}(static_cast<std::uint8_t>(n.rel)));
        mix(n.constant.hash());
        mix(std::hash<FormulaId>{}(n.child[0]));
        mix(std::hash<FormulaId>{}(n.child[1]));
        return h;
    }
};

// ── factory ────────────────────────────────────────────────────────────────

class FormulaFactory {
public:
    FormulaFactory() = default;
    FormulaFactory(const FormulaFactory&) = delete;
    FormulaFactory& operator=(const FormulaFactory&) = delete;

    FormulaId truth() { return intern(FormulaNode{NodeKind::True, {}, CmpRel::Lt, Rational(), {kInvalidFormula, kInvalidFormula}}); }
    FormulaId falsity() { return intern(FormulaNode{NodeKind::False, {}, CmpRel::Lt, Rational(), {kInvalidFormula, kInvalidFormula}}); }

    FormulaId prop(std::string name);
    FormulaId cmp(std::string var, CmpRel rel, Rational constant);

    FormulaId negation(FormulaId a) { return unary(NodeKind::Not, a); }
    FormulaId conj(FormulaId a, FormulaId b) { return binary(NodeKind::And, a, b); }
    FormulaId disj(FormulaId a, FormulaId b) { return binary(NodeKind::Or, a, b); }
    FormulaId implies(FormulaId a, FormulaId b) { return binary(NodeKind::Implies, a, b); }
    FormulaId next(FormulaId a) { return unary(NodeKind::Next, a); }
    FormulaId eventually(FormulaId a) { return unary(NodeKind::Eventually, a); }
    FormulaId globally(FormulaId a) { return unary(NodeKind::Globally, a); }
    FormulaId until(FormulaId a, FormulaId b) { return binary(NodeKind::Until, a, b); }
    FormulaId release(FormulaId a, FormulaId b) { return binary(NodeKind::Release, a, b); }

    // Left-fold conjunction/disjunction; empty input yields true/false.
    FormulaId conj_all(const std::vector<FormulaId>& parts);
    FormulaId disj_all(const std::vector<FormulaId>& parts);

    // Weak until sugar, in release form: a W b = b R (a | b). Not a node
    // kind of its own. The release form is what the tableau engine wants —
    // a greatest-fixpoint obligation carries no fairness set, so a weak
    // obligation that is simply never discharged does not force the search
    // to look for a fulfilling state (the (a U b) | G a form does, and the
    // detour through the until branch is exponential on wide conjunctions).
    FormulaId weak_until(FormulaId a, FormulaId b) {
        return release(b, disj(a, b));
    }

    const FormulaNode& node(FormulaId id) const { return nodes_[id]; }
    std::size_t node_count() const { return nodes_.size(); }

private:
    FormulaId unary(NodeKind kind, FormulaId a) {
        return intern(FormulaNode{kind, {}, CmpRel::Lt, Rational(), {a, kInvalidFormula}});
    }
    FormulaId binary(NodeKind kind, FormulaId a, FormulaId b) {
        return intern(FormulaNode{kind, {}, CmpRel::Lt, Rational(), {a, b}});
    }
    FormulaId intern(FormulaNode node);

    // Deque keeps node addresses stable across growth; the mutex makes
    // concurrent construction safe. Formulas are immutable once created, so
    // an id handed to another thread can be dereferenced freely.
    std::deque<FormulaNode> nodes_;
    std::unordered_map<FormulaNode, FormulaId, FormulaNodeHash> intern_;
    std::mutex mutex_;
};

// ── structural queries ─────────────────────────────────────────────────────

// Node count of the formula *tree* (shared subterms counted once per use).
std::uint64_t formula_size(const FormulaFactory& f, FormulaId id);

// Negation normal form: Implies eliminated, negations pushed onto atoms,
// Release introduced as the dual of Until (F/G dualize to each other).
FormulaId to_nnf(FormulaFactory& f, FormulaId id);

// Subformula closure of an NNF formula. Negated atoms count as literals and
// are not split, so `!p` contributes one element. Result is sorted by id.
// Precondition: id is in NNF (no Implies; Not only over atoms).
std::vector<FormulaId> closure(const FormulaFactory& f, FormulaId id);

// All boolean proposition names in the formula, sorted, deduplicated.
std::vector<std::string> collect_props(const FormulaFactory& f, FormulaId id);

// All numeric variable names in the formula, sorted, deduplicated.
std::vector<std::string> collect_numeric_vars(const FormulaFactory& f, FormulaId id);

// Canonical text in the neutral syntax accepted by parse_ltl: operators
// ! & | -> X F G U R W, minimal parentheses, comparisons as `var < c` and
// `var = c`. Release nodes in weak-until shape print as W, which keeps
// deeply nested renderings linear. parse_ltl(to_text(x)) is structurally
// identical to x.
std::string to_text(const FormulaFactory& f, FormulaId id);

} // namespace reqlint
