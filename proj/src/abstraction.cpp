// ============================================================================
// abstraction.cpp — region abstraction of numeric constraints
// ============================================================================

#include "reqlint/abstraction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "reqlint/errors.hpp"

namespace reqlint {

Signature extract_signature(const FormulaFactory& f, FormulaId id) {
    Signature sig;
    std::set<std::string> props;
    std::vector<std::string> var_order;                    // first-occurrence order
    std::map<std::string, std::set<Rational, std::less<>>> var_consts;

    // DFS preserving left-to-right order (children pushed reversed), so
    // variables register in first-occurrence order. Shared subterms are
    // visited once; the first visit is the leftmost occurrence.
    std::unordered_set<FormulaId> seen;
    std::vector<FormulaId> stack{id};
    while (!stack.empty()) {
        const FormulaId cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        const FormulaNode& n = f.node(cur);
        if (n.kind == NodeKind::Prop) {
            props.insert(n.name);
        } else if (n.kind == NodeKind::Cmp) {
            auto [it, fresh] = var_consts.emplace(n.name, std::set<Rational, std::less<>>{});
            if (fresh) var_order.push_back(n.name);
            it->second.insert(n.constant);
        }
        for (std::size_t i = n.child.size(); i-- > 0;) {
            if (n.child[i] != kInvalidFormula) stack.push_back(n.child[i]);
        }
    }

    for (const std::string& v : var_order) {
        if (props.count(v)) throw MixedUseError(v);
        Signature::Variable var;
        var.name = v;
        var.constants.assign(var_consts[v].begin(), var_consts[v].end());
        std::sort(var.constants.begin(), var.constants.end());
        sig.variables.push_back(std::move(var));
    }
    sig.bool_props.assign(props.begin(), props.end());
    return sig;
}

Rational VariableRegions::representative(std::size_t j) const {
    const std::size_t k = constants.size();
    if (j == 0) return constants.front() - Rational(1);
    if (j == 2 * k) return constants.back() + Rational(1);
    if (j % 2 == 1) return constants[(j - 1) / 2];
    return Rational::midpoint(constants[j / 2 - 1], constants[j / 2]);
}

const VariableRegions* AbstractionMap::find(const std::string& var) const {
    for (const auto& v : variables)
        if (v.var == var) return &v;
    return nullptr;
}

std::size_t AbstractionMap::total_region_props() const {
    std::size_t total = 0;
    for (const auto& v : variables) total += v.region_props.size();
    return total;
}

namespace {

// exactly-one over the region propositions of one variable:
// (r_0 | ... | r_m) & !(r_0 & r_1) & !(r_0 & r_2) & ... (all pairs i < j).
FormulaId exactly_one(FormulaFactory& f, const std::vector<FormulaId>& props) {
    FormulaId acc = f.disj_all(props);
    for (std::size_t i = 0; i < props.size(); ++i)
        for (std::size_t j = i + 1; j < props.size(); ++j)
            acc = f.conj(acc, f.negation(f.conj(props[i], props[j])));
    return acc;
}

// Rewrites constraint atoms to region disjunctions, keeping everything else.
class Substituter {
public:
    Substituter(FormulaFactory& f, const AbstractionMap& map) : f_(f), map_(map) {}

    FormulaId apply(FormulaId id) {
        auto it = memo_.find(id);
        if (it != memo_.end()) return it->second;
        const FormulaNode& n = f_.node(id);
        FormulaId out = id;
        switch (n.kind) {
            case NodeKind::True:
            case NodeKind::False:
            case NodeKind::Prop: break;
            case NodeKind::Cmp: out = substitute_cmp(n); break;
            case NodeKind::Not: out = f_.negation(apply(n.child[0])); break;
            case NodeKind::And: out = f_.conj(apply(n.child[0]), apply(n.child[1])); break;
            case NodeKind::Or: out = f_.disj(apply(n.child[0]), apply(n.child[1])); break;
            case NodeKind::Implies: out = f_.implies(apply(n.child[0]), apply(n.child[1])); break;
            case NodeKind::Next: out = f_.next(apply(n.child[0])); break;
            case NodeKind::Eventually: out = f_.eventually(apply(n.child[0])); break;
            case NodeKind::Globally: out = f_.globally(apply(n.child[0])); break;
            case NodeKind::Until: out = f_.until(apply(n.child[0]), apply(n.child[1])); break;
            case NodeKind::Release: out = f_.release(apply(n.child[0]), apply(n.child[1])); break;
        }
        memo_[id] = out;
        return out;
    }

private:
    FormulaId substitute_cmp(const FormulaNode& n) {
        const VariableRegions* regions = map_.find(n.name);
        if (regions == nullptr)
            throw std::logic_error("substitution: unmapped variable " + n.name);
        const auto pos = std::lower_bound(regions->constants.begin(), regions->constants.end(),
                                          n.constant);
        if (pos == regions->constants.end() || *pos != n.constant)
            throw std::logic_error("substitution: unmapped constant for " + n.name);
        // Constants are 1-based in the region scheme: c_i has point region
        // 2i-1; everything strictly below c_i is regions 0 .. 2i-2.
        const std::size_t i = static_cast<std::size_t>(pos - regions->constants.begin()) + 1;
        if (n.rel == CmpRel::Eq) return f_.prop(regions->region_props[2 * i - 1]);
        std::vector<FormulaId> below;
        for (std::size_t j = 0; j + 1 <= 2 * i - 1; ++j)
            below.push_back(f_.prop(regions->region_props[j]));
        return f_.disj_all(below);
    }

    FormulaFactory& f_;
    const AbstractionMap& map_;
    std::unordered_map<FormulaId, FormulaId> memo_;
};

} // namespace

AbstractionResult build_abstraction(FormulaFactory& f, FormulaId id) {
    const Signature sig = extract_signature(f, id);

    AbstractionResult result;
    for (const auto& var : sig.variables) {
        VariableRegions regions;
        regions.var = var.name;
        regions.constants = var.constants;
        const std::size_t k = var.constants.size();
        for (std::size_t j = 0; j <= 2 * k; ++j)
            regions.region_props.push_back("__" + var.name + "__r" + std::to_string(j));
        result.map.variables.push_back(std::move(regions));
    }

    // Defensive: generated names must be fresh (parsers reject the __ prefix,
    // but formulas can also be built programmatically).
    {
        std::set<std::string> user_props(sig.bool_props.begin(), sig.bool_props.end());
        for (const auto& v : result.map.variables)
            for (const auto& rp : v.region_props)
                if (user_props.count(rp))
                    throw MixedUseError(rp);
    }

    std::vector<FormulaId> side;
    for (const auto& v : result.map.variables) {
        std::vector<FormulaId> props;
        for (const auto& name : v.region_props) props.push_back(f.prop(name));
        side.push_back(exactly_one(f, props));
    }
    result.q_m = f.globally(f.conj_all(side)); // conj_all({}) == true for boolean-only input

    Substituter subst(f, result.map);
    result.phi_prime = subst.apply(id);
    return result;
}

LassoTrace concretize_witness(const LassoTrace& witness, const AbstractionMap& map) {
    LassoTrace out = witness;
    const auto concretize_state = [&](TraceState& state) {
        for (const auto& v : map.variables) {
            std::size_t active = 0, active_index = 0;
            for (std::size_t j = 0; j < v.region_props.size(); ++j) {
                auto it = state.props.find(v.region_props[j]);
                if (it != state.props.end() && it->second) {
                    ++active;
                    active_index = j;
                }
            }
            if (active != 1) throw NoActiveRegionError(v.var, active);
            state.values[v.var] = v.representative(active_index);
            for (const std::string& rp : v.region_props) state.props.erase(rp);
        }
    };
    for (auto& s : out.prefix) concretize_state(s);
    for (auto& s : out.loop) concretize_state(s);
    return out;
}

} // namespace reqlint
