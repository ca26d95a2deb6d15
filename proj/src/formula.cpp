// ============================================================================
// formula.cpp — interned LTL formula DAG
// ============================================================================

#include "reqlint/formula.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace reqlint {

// ── factory ────────────────────────────────────────────────────────────────

FormulaId FormulaFactory::prop(std::string name) {
    FormulaNode n;
    n.kind = NodeKind::Prop;
    n.name = std::move(name);
    return intern(std::move(n));
}

FormulaId FormulaFactory::cmp(std::string var, CmpRel rel, Rational constant) {
    FormulaNode n;
    n.kind = NodeKind::Cmp;
    n.name = std::move(var);
    n.rel = rel;
    n.constant = constant;
    return intern(std::move(n));
}

FormulaId FormulaFactory::conj_all(const std::vector<FormulaId>& parts) {
    if (parts.empty()) return truth();
    FormulaId acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
    return acc;
}

FormulaId FormulaFactory::disj_all(const std::vector<FormulaId>& parts) {
    if (parts.empty()) return falsity();
    FormulaId acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
    return acc;
}

FormulaId FormulaFactory::intern(FormulaNode node) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = intern_.find(node);
    if (it != intern_.end()) return it->second;
    const FormulaId id = static_cast<FormulaId>(nodes_.size());
    nodes_.push_back(node);
    intern_.emplace(std::move(node), id);
    return id;
}

// ── structural queries ─────────────────────────────────────────────────────

std::uint64_t formula_size(const FormulaFactory& f, FormulaId id) {
    // Memoized tree size: shared subterms count once per occurrence.
    std::unordered_map<FormulaId, std::uint64_t> memo;
    // Post-order over an explicit stack; children strictly precede parents.
    std::vector<std::pair<FormulaId, bool>> stack{{id, false}};
    while (!stack.empty()) {
        auto [cur, expanded] = stack.back();
        stack.pop_back();
        if (memo.count(cur)) continue;
        const FormulaNode& n = f.node(cur);
        if (expanded) {
            std::uint64_t total = 1;
            for (FormulaId c : n.child)
                if (c != kInvalidFormula) total += memo.at(c);
            memo[cur] = total;
        } else {
            stack.push_back({cur, true});
            for (FormulaId c : n.child)
                if (c != kInvalidFormula && !memo.count(c)) stack.push_back({c, false});
        }
    }
    return memo.at(id);
}

namespace {

// NNF with two mutually recursive memoized transforms: pos(id) = NNF(id),
// neg(id) = NNF(!id).
class NnfBuilder {
public:
    explicit NnfBuilder(FormulaFactory& f) : f_(f) {}

    FormulaId pos(FormulaId id) {
        auto it = pos_.find(id);
        if (it != pos_.end()) return it->second;
        const FormulaNode& n = f_.node(id);
        FormulaId out = kInvalidFormula;
        switch (n.kind) {
            case NodeKind::True:
            case NodeKind::False:
            case NodeKind::Prop:
            case NodeKind::Cmp: out = id; break;
            case NodeKind::Not: out = neg(n.child[0]); break;
            case NodeKind::And: out = f_.conj(pos(n.child[0]), pos(n.child[1])); break;
            case NodeKind::Or: out = f_.disj(pos(n.child[0]), pos(n.child[1])); break;
            case NodeKind::Implies: out = f_.disj(neg(n.child[0]), pos(n.child[1])); break;
            case NodeKind::Next: out = f_.next(pos(n.child[0])); break;
            case NodeKind::Eventually: out = f_.eventually(pos(n.child[0])); break;
            case NodeKind::Globally: out = f_.globally(pos(n.child[0])); break;
            case NodeKind::Until: out = f_.until(pos(n.child[0]), pos(n.child[1])); break;
            case NodeKind::Release: out = f_.release(pos(n.child[0]), pos(n.child[1])); break;
        }
        pos_[id] = out;
        return out;
    }

    FormulaId neg(FormulaId id) {
        auto it = neg_.find(id);
        if (it != neg_.end()) return it->second;
        const FormulaNode& n = f_.node(id);
        FormulaId out = kInvalidFormula;
        switch (n.kind) {
            case NodeKind::True: out = f_.falsity(); break;
            case NodeKind::False: out = f_.truth(); break;
            case NodeKind::Prop:
            case NodeKind::Cmp: out = f_.negation(id); break;
            case NodeKind::Not: out = pos(n.child[0]); break;
            case NodeKind::And: out = f_.disj(neg(n.child[0]), neg(n.child[1])); break;
            case NodeKind::Or: out = f_.conj(neg(n.child[0]), neg(n.child[1])); break;
            case NodeKind::Implies: out = f_.conj(pos(n.child[0]), neg(n.child[1])); break;
            case NodeKind::Next: out = f_.next(neg(n.child[0])); break;
            case NodeKind::Eventually: out = f_.globally(neg(n.child[0])); break;
            case NodeKind::Globally: out = f_.eventually(neg(n.child[0])); break;
            case NodeKind::Until: out = f_.release(neg(n.child[0]), neg(n.child[1])); break;
            case NodeKind::Release: out = f_.until(neg(n.child[0]), neg(n.child[1])); break;
        }
        neg_[id] = out;
        return out;
    }

private:
    FormulaFactory& f_;
    std::unordered_map<FormulaId, FormulaId> pos_, neg_;
};

} // namespace

FormulaId to_nnf(FormulaFactory& f, FormulaId id) { return NnfBuilder(f).pos(id); }

std::vector<FormulaId> closure(const FormulaFactory& f, FormulaId id) {
    std::set<FormulaId> seen;
    std::vector<FormulaId> stack{id};
    while (!stack.empty()) {
        const FormulaId cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        const FormulaNode& n = f.node(cur);
        switch (n.kind) {
            case NodeKind::Implies:
                throw std::logic_error("closure: formula not in negation normal form");
            case NodeKind::Not: {
                const NodeKind ck = f.node(n.child[0]).kind;
                if (ck != NodeKind::Prop && ck != NodeKind::Cmp)
                    throw std::logic_error("closure: formula not in negation normal form");
                break; // literal: do not descend
            }
            case NodeKind::True:
            case NodeKind::False:
            case NodeKind::Prop:
            case NodeKind::Cmp: break;
            default:
                for (FormulaId c : n.child)
                    if (c != kInvalidFormula) stack.push_back(c);
                break;
        }
    }
    return std::vector<FormulaId>(seen.begin(), seen.end());
}

namespace {

template <typename Pred>
std::vector<std::string> collect_names(const FormulaFactory& f, FormulaId id, Pred take) {
    std::set<std::string> names;
    std::unordered_set<FormulaId> seen;
    std::vector<FormulaId> stack{id};
    while (!stack.empty()) {
        const FormulaId cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        const FormulaNode& n = f.node(cur);
        if (take(n)) names.insert(n.name);
        for (FormulaId c : n.child)
            if (c != kInvalidFormula) stack.push_back(c);
    }
    return std::vector<std::string>(names.begin(), names.end());
}

} // namespace

std::vector<std::string> collect_props(const FormulaFactory& f, FormulaId id) {
    return collect_names(f, id, [](const FormulaNode& n) { return n.kind == NodeKind::Prop; });
}

std::vector<std::string> collect_numeric_vars(const FormulaFactory& f, FormulaId id) {
    return collect_names(f, id, [](const FormulaNode& n) { return n.kind == NodeKind::Cmp; });
}

// ── printing ───────────────────────────────────────────────────────────────

namespace {

// Precedence levels, loosest to tightest: -> (0), | (1), & (2), U/R (3),
// unary (4), atoms (5). U/R and -> are right-associative; & and | print as
// left-leaning chains.
int precedence_of(NodeKind k) {
    switch (k) {
        case NodeKind::Implies: return 0;
        case NodeKind::Or: return 1;
        case NodeKind::And: return 2;
        case NodeKind::Until:
        case NodeKind::Release: return 3;
        case NodeKind::Not:
        case NodeKind::Next:
        case NodeKind::Eventually:
        case NodeKind::Globally: return 4;
        default: return 5;
    }
}

void print_rec(const FormulaFactory& f, FormulaId id, int min_prec, std::string& out) {
    const FormulaNode& n = f.node(id);
    const int prec = precedence_of(n.kind);
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (n.kind) {
        case NodeKind::True: out += "true"; break;
        case NodeKind::False: out += "false"; break;
        case NodeKind::Prop: out += n.name; break;
        case NodeKind::Cmp:
            out += n.name;
            out += (n.rel == CmpRel::Lt) ? " < " : " = ";
            out += n.constant.to_decimal_string();
            break;
        case NodeKind::Not:
            out += '!';
            print_rec(f, n.child[0], 4, out);
            break;
        case NodeKind::Next:
        case NodeKind::Eventually:
        case NodeKind::Globally:
            out += (n.kind == NodeKind::Next) ? 'X' : (n.kind == NodeKind::Eventually) ? 'F' : 'G';
            out += ' ';
            print_rec(f, n.child[0], 4, out);
            break;
        case NodeKind::Until:
        case NodeKind::Release: {
            // Release nodes of the shape b R (a | b) are exactly what
            // weak_until builds; printing them as a W b keeps nested
            // renderings linear where the expanded form doubles per level.
            const FormulaNode& rhs = f.node(n.child[1]);
            if (n.kind == NodeKind::Release && rhs.kind == NodeKind::Or &&
                rhs.child[1] == n.child[0]) {
                print_rec(f, rhs.child[0], 4, out);
                out += " W ";
                print_rec(f, n.child[0], 3, out);
                break;
            }
            print_rec(f, n.child[0], 4, out);
            out += (n.kind == NodeKind::Until) ? " U " : " R ";
            print_rec(f, n.child[1], 3, out);
            break;
        }
        case NodeKind::And:
            print_rec(f, n.child[0], 2, out);
            out += " & ";
            print_rec(f, n.child[1], 3, out);
            break;
        case NodeKind::Or:
            print_rec(f, n.child[0], 1, out);
            out += " | ";
            print_rec(f, n.child[1], 2, out);
            break;
        case NodeKind::Implies:
            print_rec(f, n.child[0], 1, out);
            out += " -> ";
            print_rec(f, n.child[1], 0, out);
            break;
    }
    if (parens) out += ')';
}

} // namespace

std::string to_text(const FormulaFactory& f, FormulaId id) {
    std::string out;
    print_rec(f, id, 0, out);
    return out;
}

} // namespace reqlint
