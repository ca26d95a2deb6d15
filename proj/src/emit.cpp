// ============================================================================
// emit.cpp — serialization of abstracted problems for external checkers
// ============================================================================

#include "reqlint/emit.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace reqlint {

namespace {

// Propositions of `id` in first-occurrence (left-to-right) order.
void props_in_order(const FormulaFactory& f, FormulaId id, std::set<std::string>& seen,
                    std::vector<std::string>& out) {
    const FormulaNode& n = f.node(id);
    if (n.kind == NodeKind::Prop) {
        if (seen.insert(n.name).second)
            out.push_back(n.name);
        return;
    }
    if (n.kind == NodeKind::Cmp)
        throw std::logic_error("emit: constraint atom in an abstracted problem");
    if (n.child[0] != kInvalidFormula)
        props_in_order(f, n.child[0], seen, out);
    if (n.child[1] != kInvalidFormula)
        props_in_order(f, n.child[1], seen, out);
}

// Fully parenthesized SMV rendering. Release is not in the emitted operator
// set and is rewritten as !(!a U !b) on the fly; constants use the SMV
// spellings TRUE/FALSE (which the neutral parser also accepts).
void smv_expr(const FormulaFactory& f, FormulaId id, std::ostringstream& os) {
    const FormulaNode& n = f.node(id);
    auto unary = [&](const char* op) {
        os << op << "(";
        smv_expr(f, n.child[0], os);
        os << ")";
    };
    auto binary = [&](const char* op) {
        os << "(";
        smv_expr(f, n.child[0], os);
        os << " " << op << " ";
        smv_expr(f, n.child[1], os);
        os << ")";
    };
    switch (n.kind) {
    case NodeKind::True:
        os << "TRUE";
        return;
    case NodeKind::False:
        os << "FALSE";
        return;
    case NodeKind::Prop:
        os << n.name;
        return;
    case NodeKind::Cmp:
        throw std::logic_error("emit: constraint atom in an abstracted problem");
    case NodeKind::Not:
        os << "!";
        os << "(";
        smv_expr(f, n.child[0], os);
        os << ")";
        return;
    case NodeKind::And:
        binary("&");
        return;
    case NodeKind::Or:
        binary("|");
        return;
    case NodeKind::Implies:
        binary("->");
        return;
    case NodeKind::Next:
        unary("X ");
        return;
    case NodeKind::Eventually:
        unary("F ");
        return;
    case NodeKind::Globally:
        unary("G ");
        return;
    case NodeKind::Until:
        binary("U");
        return;
    case NodeKind::Release:
        os << "!((!(";
        smv_expr(f, n.child[0], os);
        os << ")) U (!(";
        smv_expr(f, n.child[1], os);
        os << ")))";
        return;
    }
    throw std::logic_error("emit: unknown node kind");
}

} // namespace

std::string emit_neutral(const FormulaFactory& f, const AbstractionResult& problem) {
    std::ostringstream os;
    os << to_text(f, problem.q_m) << "\n" << to_text(f, problem.phi_prime) << "\n";
    return os.str();
}

std::string emit_smv(const FormulaFactory& f, const AbstractionResult& problem) {
    std::set<std::string> seen;
    std::vector<std::string> props;
    props_in_order(f, problem.q_m, seen, props);
    props_in_order(f, problem.phi_prime, seen, props);

    std::ostringstream os;
    os << "MODULE main\n";
    if (!props.empty()) {
        os << "VAR\n";
        for (const std::string& p : props)
            os << "  " << p << " : boolean;\n";
    }
    os << "LTLSPEC !(";
    smv_expr(f, problem.q_m, os);
    os << " & ";
    smv_expr(f, problem.phi_prime, os);
    os << ")\n";
    return os.str();
}

std::string emit(const FormulaFactory& f, const AbstractionResult& problem, EmitTarget target) {
    switch (target) {
    case EmitTarget::Smv:
        return emit_smv(f, problem);
    case EmitTarget::NeutralLtl:
        return emit_neutral(f, problem);
    }
    throw std::logic_error("emit: unknown target");
}

} // namespace reqlint
