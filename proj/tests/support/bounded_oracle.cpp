// ============================================================================
// bounded_oracle.cpp — exhaustive small-lasso search
// ============================================================================
#include "support/bounded_oracle.hpp"

#include <stdexcept>

namespace reqlint::testgen {

namespace {
constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);
}

LassoEnumerator::LassoEnumerator(const FormulaFactory& f, FormulaId id,
                                 std::vector<TraceState> alphabet)
    : f_(f), root_(id), alphabet_(std::move(alphabet)) {
    slot_.assign(f_.node_count(), kNoSlot);
    // Children-first topological order via explicit stack.
    std::vector<std::pair<FormulaId, bool>> stack{{id, false}};
    while (!stack.empty()) {
        auto [cur, expanded] = stack.back();
        stack.pop_back();
        if (slot_[cur] != kNoSlot)
            continue;
        const FormulaNode& n = f_.node(cur);
        if (expanded) {
            slot_[cur] = order_.size();
            order_.push_back(cur);
            continue;
        }
        stack.push_back({cur, true});
        for (int i = 0; i < 2; ++i)
            if (n.child[i] != kInvalidFormula)
                stack.push_back({n.child[i], false});
    }

    atoms_.assign(order_.size(), {});
    for (std::size_t s = 0; s < order_.size(); ++s) {
        const FormulaNode& n = f_.node(order_[s]);
        if (n.kind != NodeKind::Prop && n.kind != NodeKind::Cmp)
            continue;
        std::vector<char> row(alphabet_.size());
        for (std::size_t a = 0; a < alphabet_.size(); ++a) {
            if (n.kind == NodeKind::Prop) {
                row[a] = alphabet_[a].props.at(n.name) ? 1 : 0;
            } else {
                const Rational& v = alphabet_[a].values.at(n.name);
                row[a] = (n.rel == CmpRel::Lt ? v < n.constant : v == n.constant) ? 1 : 0;
            }
        }
        atoms_[s] = std::move(row);
    }
}

bool LassoEnumerator::eval_word(const std::vector<int>& word, int split) const {
    const std::size_t n = word.size();
    const std::size_t slots = order_.size();
    std::vector<char> rows(slots * n);
    auto row = [&](std::size_t s) { return rows.data() + s * n; };
    auto succ = [&](std::size_t i) {
        return i + 1 < n ? i + 1 : static_cast<std::size_t>(split);
    };

    for (std::size_t s = 0; s < slots; ++s) {
        const FormulaNode& nd = f_.node(order_[s]);
        char* out = row(s);
        switch (nd.kind) {
        case NodeKind::True:
            for (std::size_t i = 0; i < n; ++i) out[i] = 1;
            break;
        case NodeKind::False:
            for (std::size_t i = 0; i < n; ++i) out[i] = 0;
            break;
        case NodeKind::Prop:
        case NodeKind::Cmp:
            for (std::size_t i = 0; i < n; ++i)
                out[i] = atoms_[s][static_cast<std::size_t>(word[i])];
            break;
        case NodeKind::Not: {
            const char* c = row(slot_[nd.child[0]]);
            for (std::size_t i = 0; i < n; ++i) out[i] = !c[i];
            break;
        }
        case NodeKind::And: {
            const char* a = row(slot_[nd.child[0]]);
            const char* b = row(slot_[nd.child[1]]);
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] && b[i];
            break;
        }
        case NodeKind::Or: {
            const char* a = row(slot_[nd.child[0]]);
            const char* b = row(slot_[nd.child[1]]);
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] || b[i];
            break;
        }
        case NodeKind::Implies: {
            const char* a = row(slot_[nd.child[0]]);
            const char* b = row(slot_[nd.child[1]]);
            for (std::size_t i = 0; i < n; ++i) out[i] = !a[i] || b[i];
            break;
        }
        case NodeKind::Next: {
            const char* c = row(slot_[nd.child[0]]);
            for (std::size_t i = 0; i < n; ++i) out[i] = c[succ(i)];
            break;
        }
        case NodeKind::Eventually:
        case NodeKind::Until: {
            // Least fixpoint from all-false.
            const char* b = row(slot_[nd.kind == NodeKind::Until ? nd.child[1] : nd.child[0]]);
            const char* a = nd.kind == NodeKind::Until ? row(slot_[nd.child[0]]) : nullptr;
            for (std::size_t i = 0; i < n; ++i) out[i] = 0;
            for (bool changed = true; changed;) {
                changed = false;
                for (std::size_t i = n; i-- > 0;) {
                    char v = b[i] || ((a == nullptr || a[i]) && out[succ(i)]);
                    if (v != out[i]) {
                        out[i] = v;
                        changed = true;
                    }
                }
            }
            break;
        }
        case NodeKind::Globally:
        case NodeKind::Release: {
            // Greatest fixpoint from all-true.
            const char* b = row(slot_[nd.kind == NodeKind::Release ? nd.child[1] : nd.child[0]]);
            const char* a = nd.kind == NodeKind::Release ? row(slot_[nd.child[0]]) : nullptr;
            for (std::size_t i = 0; i < n; ++i) out[i] = 1;
            for (bool changed = true; changed;) {
                changed = false;
                for (std::size_t i = n; i-- > 0;) {
                    char v = b[i] && ((a != nullptr && a[i]) || out[succ(i)]);
                    if (v != out[i]) {
                        out[i] = v;
                        changed = true;
                    }
                }
            }
            break;
        }
        }
    }
    return rows[slot_[root_] * n] != 0;
}

std::optional<LassoTrace> LassoEnumerator::find_satisfying(int max_total) const {
    const int a = static_cast<int>(alphabet_.size());
    if (a == 0)
        throw std::logic_error("bounded oracle: empty alphabet");
    for (int n = 1; n <= max_total; ++n) {
        std::vector<int> word(static_cast<std::size_t>(n), 0);
        for (;;) {
            for (int split = 0; split < n; ++split) {
                if (eval_word(word, split)) {
                    LassoTrace t;
                    for (int i = 0; i < split; ++i)
                        t.prefix.push_back(alphabet_[static_cast<std::size_t>(word[i])]);
                    for (int i = split; i < n; ++i)
                        t.loop.push_back(alphabet_[static_cast<std::size_t>(word[i])]);
                    return t;
                }
            }
            // Odometer step.
            int pos = n - 1;
            while (pos >= 0 && word[static_cast<std::size_t>(pos)] == a - 1)
                word[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0)
                break;
            ++word[static_cast<std::size_t>(pos)];
        }
    }
    return std::nullopt;
}

std::size_t LassoEnumerator::lasso_count(std::size_t alphabet, int max_total) {
    std::size_t total = 0;
    std::size_t words = 1;
    for (int n = 1; n <= max_total; ++n) {
        words *= alphabet;
        total += words * static_cast<std::size_t>(n);
    }
    return total;
}

} // namespace reqlint::testgen
