// ============================================================================
// trace.cpp — reference LTL evaluation on lassos
// ============================================================================

#include "reqlint/trace.hpp"

#include <unordered_map>
#include <unordered_set>

#include "reqlint/errors.hpp"

namespace reqlint {

namespace {

// Distinct subformula ids in dependency order (children before parents).
std::vector<FormulaId> topo_subformulas(const FormulaFactory& f, FormulaId root) {
    std::vector<FormulaId> order;
    std::unordered_set<FormulaId> done;
    std::vector<std::pair<FormulaId, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        if (done.count(id)) continue;
        if (expanded) {
            done.insert(id);
            order.push_back(id);
        } else {
            stack.push_back({id, true});
            for (FormulaId c : f.node(id).child)
                if (c != kInvalidFormula && !done.count(c)) stack.push_back({c, false});
        }
    }
    return order;
}

bool lookup_prop(const TraceState& s, const std::string& name) {
    auto it = s.props.find(name);
    if (it == s.props.end()) throw UncoveredPropositionError(name);
    return it->second;
}

bool eval_cmp(const TraceState& s, const FormulaNode& n) {
    auto it = s.values.find(n.name);
    if (it == s.values.end()) throw UncoveredPropositionError(n.name);
    return n.rel == CmpRel::Lt ? it->second < n.constant : it->second == n.constant;
}

} // namespace

bool eval_on_lasso(const FormulaFactory& f, FormulaId root, const LassoTrace& trace) {
    if (trace.loop.empty()) throw Error("lasso loop must be non-empty");

    const std::size_t n = trace.prefix.size() + trace.loop.size();
    const std::size_t loop_start = trace.prefix.size();
    const auto state_at = [&](std::size_t i) -> const TraceState& {
        return i < loop_start ? trace.prefix[i] : trace.loop[i - loop_start];
    };
    const auto succ = [&](std::size_t i) { return i + 1 < n ? i + 1 : loop_start; };

    // val[sub][i]: truth of subformula at position i. Temporal operators are
    // solved as fixpoints of their one-step expansions: least for U/F
    // (initialized false), greatest for R/G (initialized true). Each sweep is
    // monotone from the initialization, so at most n sweeps settle.
    std::unordered_map<FormulaId, std::vector<char>> val;
    for (FormulaId id : topo_subformulas(f, root)) {
        const FormulaNode& node = f.node(id);
        std::vector<char> row(n, 0);
        const auto fixpoint = [&](bool init, auto step) {
            std::fill(row.begin(), row.end(), static_cast<char>(init));
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = n; i-- > 0;) {
                    const bool next = row[succ(i)] != 0;
                    const bool v = step(i, next);
                    if (v != (row[i] != 0)) {
                        row[i] = v;
                        changed = true;
                    }
                }
            }
        };
        switch (node.kind) {
            case NodeKind::True: std::fill(row.begin(), row.end(), 1); break;
            case NodeKind::False: break;
            case NodeKind::Prop:
                for (std::size_t i = 0; i < n; ++i) row[i] = lookup_prop(state_at(i), node.name);
                break;
            case NodeKind::Cmp:
                for (std::size_t i = 0; i < n; ++i) row[i] = eval_cmp(state_at(i), node);
                break;
            case NodeKind::Not: {
                const auto& a = val.at(node.child[0]);
                for (std::size_t i = 0; i < n; ++i) row[i] = !a[i];
                break;
            }
            case NodeKind::And: {
                const auto& a = val.at(node.child[0]);
                const auto& b = val.at(node.child[1]);
                for (std::size_t i = 0; i < n; ++i) row[i] = a[i] && b[i];
                break;
            }
            case NodeKind::Or: {
                const auto& a = val.at(node.child[0]);
                const auto& b = val.at(node.child[1]);
                for (std::size_t i = 0; i < n; ++i) row[i] = a[i] || b[i];
                break;
            }
            case NodeKind::Implies: {
                const auto& a = val.at(node.child[0]);
                const auto& b = val.at(node.child[1]);
                for (std::size_t i = 0; i < n; ++i) row[i] = !a[i] || b[i];
                break;
            }
            case NodeKind::Next: {
                const auto& a = val.at(node.child[0]);
                for (std::size_t i = 0; i < n; ++i) row[i] = a[succ(i)];
                break;
            }
            case NodeKind::Eventually: {
                const auto& a = val.at(node.child[0]);
                fixpoint(false, [&](std::size_t i, bool nxt) { return a[i] != 0 || nxt; });
                break;
            }
            case NodeKind::Globally: {
                const auto& a = val.at(node.child[0]);
                fixpoint(true, [&](std::size_t i, bool nxt) { return a[i] != 0 && nxt; });
                break;
            }
            case NodeKind::Until: {
                const auto& a = val.at(node.child[0]);
                const auto& b = val.at(node.child[1]);
                fixpoint(false, [&](std::size_t i, bool nxt) {
                    return b[i] != 0 || (a[i] != 0 && nxt);
                });
                break;
            }
            case NodeKind::Release: {
                const auto& a = val.at(node.child[0]);
                const auto& b = val.at(node.child[1]);
                fixpoint(true, [&](std::size_t i, bool nxt) {
                    return b[i] != 0 && (a[i] != 0 || nxt);
                });
                break;
            }
        }
        val.emplace(id, std::move(row));
    }
    return val.at(root)[0] != 0;
}

} // namespace reqlint
