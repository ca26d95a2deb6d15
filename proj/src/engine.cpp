// ============================================================================
// engine.cpp — tableau-based LTL satisfiability
// ============================================================================

#include "reqlint/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "reqlint/abstraction.hpp"
#include "reqlint/errors.hpp"

namespace reqlint {

namespace {

using Clock = std::chrono::steady_clock;

// ── saturation ──────────────────────────────────────────────────────────────
//
// Enumerates, one at a time, the locally saturated and contradiction-free
// supersets of a seed set of NNF formulas. Branch points (Or, Until, Release,
// Eventually) are explored by iterative backtracking: each frame remembers the
// pending-work stack and the length of the membership trail at the moment the
// choice was made, so alternatives restart from exactly that point.

class ExpansionRun {
public:
    ExpansionRun(FormulaFactory& f, const std::vector<FormulaId>& seed)
        : f_(f), todo_(seed) {}

    // Returns the next saturated set (sorted by formula id), or nullopt when
    // all branches are exhausted.
    std::optional<std::vector<FormulaId>> next() {
        if (exhausted_)
            return std::nullopt;
        if (need_backtrack_ && !backtrack()) {
            exhausted_ = true;
            return std::nullopt;
        }
        need_backtrack_ = false;
        while (!todo_.empty()) {
            const FormulaId id = todo_.back();
            todo_.pop_back();
            if (acc_.count(id) != 0)
                continue;
            if (!expand(id)) {
                // Contradiction on this branch; resume from the next choice.
                if (!backtrack()) {
                    exhausted_ = true;
                    return std::nullopt;
                }
            }
        }
        need_backtrack_ = true;
        std::vector<FormulaId> out(trail_.begin(), trail_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct Frame {
        std::vector<std::vector<FormulaId>> alts;
        std::size_t next_alt = 0;
        std::size_t trail_mark = 0;
        std::vector<FormulaId> todo_saved;
    };

    void add(FormulaId id) {
        acc_.insert(id);
        trail_.push_back(id);
    }

    void branch(std::vector<std::vector<FormulaId>> alts) {
        Frame fr;
        fr.alts = std::move(alts);
        fr.trail_mark = trail_.size();
        fr.todo_saved = todo_;
        fr.next_alt = 1;
        for (FormulaId x : fr.alts[0])
            todo_.push_back(x);
        frames_.push_back(std::move(fr));
    }

    // A disjunct already in the set discharges its disjunction: the
    // saturation condition asks for one disjunct, and the alternatives only
    // produce supersets of states this set already covers.
    bool satisfied(FormulaId x) const {
        return acc_.count(x) != 0;
    }

    // A trivially true alternative is taken without a frame — the other
    // alternative can only yield states with strictly more obligations. The
    // node must still be pushed, not merely noted: successor seeding and
    // fairness both test set membership of the child.
    bool trivial(FormulaId x) const {
        return f_.node(x).kind == NodeKind::True;
    }

    // A literal whose complement is already present can never be added on
    // this branch (the set only grows until we backtrack past it), so a
    // choice that starts with it is dead on arrival and the other
    // alternative is forced — no backtrack frame needed.
    bool blocked(FormulaId x) {
        const FormulaNode& n = f_.node(x);
        if (n.kind == NodeKind::False)
            return true;
        if (n.kind == NodeKind::Prop)
            return acc_.count(f_.negation(x)) != 0;
        if (n.kind == NodeKind::Not)
            return acc_.count(n.child[0]) != 0;
        return false;
    }

    // Processes one formula; false means the current branch is contradictory.
    bool expand(FormulaId id) {
        const FormulaNode& n = f_.node(id);
        switch (n.kind) {
        case NodeKind::True:
            add(id);
            return true;
        case NodeKind::False:
            return false;
        case NodeKind::Prop:
            if (acc_.count(f_.negation(id)) != 0)
                return false;
            add(id);
            return true;
        case NodeKind::Not:
            // NNF keeps negation on atoms only, so the complement of this
            // literal is exactly the child (negation() wraps, never unwraps).
            if (acc_.count(n.child[0]) != 0)
                return false;
            add(id);
            return true;
        case NodeKind::And:
            add(id);
            todo_.push_back(n.child[0]);
            todo_.push_back(n.child[1]);
            return true;
        case NodeKind::Or:
            add(id);
            if (satisfied(n.child[0]) || satisfied(n.child[1]))
                return true;
            if (blocked(n.child[0]) || trivial(n.child[1]))
                todo_.push_back(n.child[1]);
            else if (blocked(n.child[1]) || trivial(n.child[0]))
                todo_.push_back(n.child[0]);
            else
                branch({{n.child[0]}, {n.child[1]}});
            return true;
        case NodeKind::Next:
            add(id);
            return true;
        case NodeKind::Globally:
            add(id);
            todo_.push_back(n.child[0]);
            return true;
        case NodeKind::Until:
            add(id);
            if (satisfied(n.child[1]))
                return true;
            if (blocked(n.child[1]))
                todo_.push_back(n.child[0]); // fulfilment impossible here: hold on
            else if (blocked(n.child[0]) || trivial(n.child[1]))
                todo_.push_back(n.child[1]); // fulfil now: holding is impossible or pointless
            else
                branch({{n.child[1]}, {n.child[0]}});
            return true;
        case NodeKind::Release:
            add(id);
            todo_.push_back(n.child[1]);
            if (satisfied(n.child[0]) || blocked(n.child[0]))
                return true; // released now, or forced to stay an obligation
            if (trivial(n.child[0])) {
                todo_.push_back(n.child[0]); // release fires immediately
                return true;
            }
            branch({{n.child[0]}, {}});
            return true;
        case NodeKind::Eventually:
            add(id);
            if (satisfied(n.child[0]) || blocked(n.child[0]))
                return true; // fulfilled now, or forced to stay an obligation
            if (trivial(n.child[0])) {
                todo_.push_back(n.child[0]); // fulfil now; deferring only adds obligations
                return true;
            }
            branch({{n.child[0]}, {}});
            return true;
        case NodeKind::Cmp:
            throw std::logic_error("engine: constraint atom reached the propositional core");
        case NodeKind::Implies:
            throw std::logic_error("engine: input is not in negation normal form");
        }
        throw std::logic_error("engine: unknown node kind");
    }

    bool backtrack() {
        while (!frames_.empty()) {
            Frame& fr = frames_.back();
            if (fr.next_alt < fr.alts.size()) {
                while (trail_.size() > fr.trail_mark) {
                    acc_.erase(trail_.back());
                    trail_.pop_back();
                }
                todo_ = fr.todo_saved;
                for (FormulaId x : fr.alts[fr.next_alt])
                    todo_.push_back(x);
                ++fr.next_alt;
                return true;
            }
            frames_.pop_back();
        }
        return false;
    }

    FormulaFactory& f_;
    std::unordered_set<FormulaId> acc_;
    std::vector<FormulaId> trail_;
    std::vector<FormulaId> todo_;
    std::vector<Frame> frames_;
    bool need_backtrack_ = false;
    bool exhausted_ = false;
};

struct StateVecHash {
    std::size_t operator()(const std::vector<FormulaId>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (FormulaId x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

constexpr std::uint32_t kNoState = 0xffffffffu;

// ── search ──────────────────────────────────────────────────────────────────

class TableauSearch {
public:
    TableauSearch(FormulaFactory& f, FormulaId original, const EngineLimits& limits)
        : f_(f), original_(original), limits_(limits), start_(Clock::now()) {
        nnf_ = to_nnf(f_, original_);
        for (FormulaId c : closure(f_, nnf_)) {
            const FormulaNode& n = f_.node(c);
            if (n.kind == NodeKind::Until)
                fairness_.push_back({c, n.child[1]});
            else if (n.kind == NodeKind::Eventually)
                fairness_.push_back({c, n.child[0]});
        }
    }

    SatVerdict run() {
        SatVerdict v;
        ExpansionRun init(f_, {nnf_});
        while (auto set = init.next()) {
            if (out_of_budget())
                return finish(v, SatResult::Indeterminate);
            std::uint32_t s0 = intern(*set);
            if (s0 == kNoState)
                return finish(v, SatResult::Indeterminate);
            if (index_[s0] == kNoState) {
                if (dfs(s0, v))
                    return finish(v, SatResult::Satisfiable);
                if (!limit_.empty())
                    return finish(v, SatResult::Indeterminate);
            }
        }
        if (out_of_budget())
            return finish(v, SatResult::Indeterminate);
        return finish(v, SatResult::Unsatisfiable);
    }

private:
    struct DfsFrame {
        std::uint32_t v;
        ExpansionRun run;
    };

    SatVerdict finish(SatVerdict& v, SatResult r) {
        v.result = r;
        v.stats.states_explored = states_.size();
        v.stats.scc_count = scc_count_;
        v.stats.wall_seconds =
            std::chrono::duration<double>(Clock::now() - start_).count();
        v.stats.limit_hit = limit_;
        return v;
    }

    bool out_of_budget() {
        if (!limit_.empty())
            return true;
        if (++tick_ % 256 == 0 || tick_ == 1) {
            double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
            if (elapsed > limits_.timeout_seconds) {
                limit_ = "time";
                return true;
            }
        }
        return false;
    }

    // Interns a state set; kNoState signals that the state cap was hit.
    std::uint32_t intern(const std::vector<FormulaId>& set) {
        auto it = state_ids_.find(set);
        if (it != state_ids_.end())
            return it->second;
        if (states_.size() >= limits_.max_states) {
            limit_ = "states";
            return kNoState;
        }
        std::uint32_t id = static_cast<std::uint32_t>(states_.size());
        auto [pos, inserted] = state_ids_.emplace(set, id);
        (void)inserted;
        states_.push_back(&pos->first);
        succs_.emplace_back();
        index_.push_back(kNoState);
        lowlink_.push_back(kNoState);
        on_stack_.push_back(false);
        on_path_.push_back(false);
        parent_.push_back(kNoState);
        scc_of_.push_back(kNoState);
        return id;
    }

    std::vector<FormulaId> seed_of(std::uint32_t s) const {
        std::vector<FormulaId> seed;
        for (FormulaId id : *states_[s]) {
            const FormulaNode& n = f_.node(id);
            switch (n.kind) {
            case NodeKind::Next:
                seed.push_back(n.child[0]);
                break;
            case NodeKind::Globally:
                seed.push_back(id);
                break;
            case NodeKind::Until:
                if (!member(s, n.child[1]))
                    seed.push_back(id);
                break;
            case NodeKind::Eventually:
                if (!member(s, n.child[0]))
                    seed.push_back(id);
                break;
            case NodeKind::Release:
                if (!member(s, n.child[0]))
                    seed.push_back(id);
                break;
            default:
                break;
            }
        }
        return seed;
    }

    bool member(std::uint32_t s, FormulaId id) const {
        const std::vector<FormulaId>& set = *states_[s];
        return std::binary_search(set.begin(), set.end(), id);
    }

    bool fair_at(std::uint32_t s, std::size_t k) const {
        return !member(s, fairness_[k].first) || member(s, fairness_[k].second);
    }

    // Iterative Tarjan from root; true means an accepting lasso was found and
    // written into `v`. Sets limit_ and returns false when a cap was hit.
    bool dfs(std::uint32_t root, SatVerdict& v) {
        discover(root, kNoState);
        std::vector<DfsFrame> stack;
        stack.push_back({root, ExpansionRun(f_, seed_of(root))});
        on_path_[root] = true;
        while (!stack.empty()) {
            if (out_of_budget())
                return false;
            DfsFrame& fr = stack.back();
            if (auto set = fr.run.next()) {
                std::uint32_t w = intern(*set);
                if (w == kNoState)
                    return false;
                succs_[fr.v].push_back(w);
                if (index_[w] == kNoState) {
                    discover(w, fr.v);
                    stack.push_back({w, ExpansionRun(f_, seed_of(w))});
                    on_path_[w] = true;
                } else if (on_stack_[w]) {
                    lowlink_[fr.v] = std::min(lowlink_[fr.v], index_[w]);
                    // A back edge onto the current DFS path closes a concrete
                    // cycle; accept immediately when that cycle already meets
                    // every fairness set instead of waiting for the full
                    // component to be enumerated.
                    if (on_path_[w] && try_path_cycle(stack, w, v))
                        return true;
                }
                continue;
            }
            std::uint32_t done = fr.v;
            stack.pop_back();
            on_path_[done] = false;
            if (!stack.empty())
                lowlink_[stack.back().v] = std::min(lowlink_[stack.back().v], lowlink_[done]);
            if (lowlink_[done] == index_[done]) {
                std::vector<std::uint32_t> members;
                std::uint32_t x;
                do {
                    x = tarjan_stack_.back();
                    tarjan_stack_.pop_back();
                    on_stack_[x] = false;
                    scc_of_[x] = static_cast<std::uint32_t>(scc_count_);
                    members.push_back(x);
                } while (x != done);
                ++scc_count_;
                if (accepting(done, members)) {
                    build_witness(done, v);
                    return true;
                }
            }
        }
        return false;
    }

    void discover(std::uint32_t s, std::uint32_t from) {
        index_[s] = lowlink_[s] = counter_++;
        on_stack_[s] = true;
        tarjan_stack_.push_back(s);
        parent_[s] = from;
    }

    bool accepting(std::uint32_t root, const std::vector<std::uint32_t>& members) const {
        bool nontrivial = members.size() > 1;
        if (!nontrivial) {
            for (std::uint32_t w : succs_[root])
                if (w == root)
                    nontrivial = true;
        }
        if (!nontrivial)
            return false;
        for (std::size_t k = 0; k < fairness_.size(); ++k) {
            bool found = false;
            for (std::uint32_t s : members) {
                if (fair_at(s, k)) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return false;
        }
        return true;
    }

    // The DFS-path segment from `w` up to the top frame, plus the back edge
    // just taken, is a real cycle. If its states cover every fairness set it
    // is an accepting lasso on its own.
    bool try_path_cycle(const std::vector<DfsFrame>& stack, std::uint32_t w, SatVerdict& v) {
        std::vector<std::uint32_t> cycle;
        for (std::size_t i = stack.size(); i-- > 0;) {
            cycle.push_back(stack[i].v);
            if (stack[i].v == w)
                break;
        }
        std::reverse(cycle.begin(), cycle.end());
        for (std::size_t k = 0; k < fairness_.size(); ++k) {
            bool found = false;
            for (std::uint32_t s : cycle) {
                if (fair_at(s, k)) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return false;
        }
        cycle.push_back(w);
        emit_witness(w, cycle, v);
        return true;
    }

    // ── witness extraction ──────────────────────────────────────────────────

    // Shortest path within the SCC from `start` to a state satisfying `pred`,
    // via the memoized successor lists (complete for a popped SCC). With
    // `allow_empty` the start state itself may satisfy the predicate; without
    // it the path has at least one edge.
    template <typename Pred>
    std::vector<std::uint32_t> scc_path(std::uint32_t start, std::uint32_t scc, Pred pred,
                                        bool allow_empty) const {
        if (allow_empty && pred(start))
            return {start};
        std::unordered_map<std::uint32_t, std::uint32_t> prev;
        std::deque<std::uint32_t> queue{start};
        std::unordered_set<std::uint32_t> seen{start};
        while (!queue.empty()) {
            std::uint32_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t w : succs_[u]) {
                if (scc_of_[w] != scc)
                    continue;
                if (pred(w)) {
                    std::vector<std::uint32_t> path{w, u};
                    while (path.back() != start)
                        path.push_back(prev.at(path.back()));
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (seen.insert(w).second) {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        throw std::logic_error("engine: disconnected strongly connected component");
    }

    TraceState to_trace_state(std::uint32_t s) const {
        TraceState t;
        for (const std::string& p : props_) {
            FormulaId pid = f_.prop(p);
            t.props[p] = member(s, pid);
        }
        return t;
    }

    void build_witness(std::uint32_t anchor, SatVerdict& v) {
        const std::uint32_t scc = scc_of_[anchor];

        // Cycle through every fairness set, then back to the anchor.
        std::vector<std::uint32_t> cycle{anchor};
        for (std::size_t k = 0; k < fairness_.size(); ++k) {
            if (fair_at(cycle.back(), k))
                continue;
            auto leg = scc_path(cycle.back(), scc,
                                [&](std::uint32_t s) { return fair_at(s, k); }, true);
            cycle.insert(cycle.end(), leg.begin() + 1, leg.end());
        }
        if (cycle.back() != anchor) {
            auto leg = scc_path(cycle.back(), scc,
                                [&](std::uint32_t s) { return s == anchor; }, true);
            cycle.insert(cycle.end(), leg.begin() + 1, leg.end());
        }
        if (cycle.size() == 1) {
            auto leg = scc_path(anchor, scc,
                                [&](std::uint32_t s) { return s == anchor; }, false);
            cycle.insert(cycle.end(), leg.begin() + 1, leg.end());
        }

        emit_witness(anchor, cycle, v);
    }

    // `cycle` is a closed node sequence [anchor, ..., anchor] whose
    // consecutive pairs are edges; the prefix is the DFS discovery path of
    // the anchor. Every witness is re-checked against the input formula with
    // the trace evaluator before it is handed out.
    void emit_witness(std::uint32_t anchor, const std::vector<std::uint32_t>& cycle,
                      SatVerdict& v) {
        props_ = collect_props(f_, original_);

        std::vector<std::uint32_t> entry{anchor};
        while (parent_[entry.back()] != kNoState)
            entry.push_back(parent_[entry.back()]);
        std::reverse(entry.begin(), entry.end());

        LassoTrace lasso;
        for (std::size_t i = 0; i + 1 < entry.size(); ++i)
            lasso.prefix.push_back(to_trace_state(entry[i]));
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
            lasso.loop.push_back(to_trace_state(cycle[i]));

        if (!eval_on_lasso(f_, original_, lasso))
            throw std::logic_error("engine: witness failed verification");
        v.witness = std::move(lasso);
    }

    FormulaFactory& f_;
    FormulaId original_;
    FormulaId nnf_ = kInvalidFormula;
    EngineLimits limits_;
    Clock::time_point start_;
    std::string limit_;
    std::size_t tick_ = 0;

    std::vector<std::pair<FormulaId, FormulaId>> fairness_; // (obligation, fulfilment)
    std::vector<std::string> props_;

    std::unordered_map<std::vector<FormulaId>, std::uint32_t, StateVecHash> state_ids_;
    std::vector<const std::vector<FormulaId>*> states_;
    std::vector<std::vector<std::uint32_t>> succs_;
    std::vector<std::uint32_t> index_, lowlink_, parent_, scc_of_;
    std::vector<bool> on_stack_, on_path_;
    std::vector<std::uint32_t> tarjan_stack_;
    std::uint32_t counter_ = 0;
    std::size_t scc_count_ = 0;
};

} // namespace

SatVerdict check_sat(FormulaFactory& f, FormulaId id, const EngineLimits& limits) {
    TableauSearch search(f, id, limits);
    return search.run();
}

IncrementalChecker::IncrementalChecker(FormulaFactory& f, std::vector<FormulaId> translations,
                                       EngineLimits limits)
    : f_(f), translations_(std::move(translations)), limits_(limits) {}

SatVerdict IncrementalChecker::check(const std::vector<std::size_t>& excluded,
                                     const std::vector<FormulaId>& extra,
                                     AbstractionResult* abs_out) const {
    std::unordered_set<std::size_t> skip(excluded.begin(), excluded.end());
    std::vector<FormulaId> parts;
    for (std::size_t i = 0; i < translations_.size(); ++i)
        if (skip.count(i) == 0)
            parts.push_back(translations_[i]);
    for (FormulaId e : extra)
        parts.push_back(e);
    FormulaId whole = f_.conj_all(parts);
    AbstractionResult abs = build_abstraction(f_, whole);
    SatVerdict v = check_sat(f_, f_.conj(abs.q_m, abs.phi_prime), limits_);
    if (abs_out != nullptr)
        *abs_out = std::move(abs);
    return v;
}

} // namespace reqlint
