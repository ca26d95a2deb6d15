// ============================================================================
// window_oracle.cpp — direct positional semantics for pattern sentences
// ============================================================================
#include "support/window_oracle.hpp"

#include <stdexcept>

namespace reqlint::testgen {

namespace {

// Access into the unrolled lasso word. Positions from P on repeat with
// period L, so any existential question starting at `from` is settled within
// from + P + 2L + 2 positions, and universal questions over an unbounded
// window are settled by checking starts below P + 2L.
struct Word {
    const FormulaFactory& f;
    const LassoTrace& t;
    long long P, L;

    const TraceState& at(long long i) const {
        if (i < P)
            return t.prefix[static_cast<std::size_t>(i)];
        return t.loop[static_cast<std::size_t>((i - P) % L)];
    }
};

bool eval_prop(const FormulaFactory& f, FormulaId id, const TraceState& s) {
    const FormulaNode& n = f.node(id);
    switch (n.kind) {
    case NodeKind::True: return true;
    case NodeKind::False: return false;
    case NodeKind::Prop: return s.props.at(n.name);
    case NodeKind::Cmp: {
        const Rational& v = s.values.at(n.name);
        return n.rel == CmpRel::Lt ? v < n.constant : v == n.constant;
    }
    case NodeKind::Not: return !eval_prop(f, n.child[0], s);
    case NodeKind::And: return eval_prop(f, n.child[0], s) && eval_prop(f, n.child[1], s);
    case NodeKind::Or: return eval_prop(f, n.child[0], s) || eval_prop(f, n.child[1], s);
    case NodeKind::Implies: return !eval_prop(f, n.child[0], s) || eval_prop(f, n.child[1], s);
    default:
        throw std::logic_error("window oracle: temporal operator in a payload");
    }
}

struct Window {
    const Word& w;

    bool holds(FormulaId id, long long i) const { return eval_prop(w.f, id, w.at(i)); }

    // First position in [from, to) where `id` holds; to < 0 means "ever",
    // which is settled within from + P + 2L + 2.
    long long find_first(FormulaId id, long long from, long long to) const {
        long long bound = to >= 0 ? to : from + w.P + 2 * w.L + 2;
        for (long long i = from; i < bound; ++i)
            if (holds(id, i))
                return i;
        return -1;
    }

    // Pattern truth on the window [a, b); b < 0 means unbounded.
    bool pattern(const Pattern& pat, long long a, long long b) const {
        const long long horizon = w.P + 2 * w.L;
        const long long B = b >= 0 ? b : horizon; // bound for universal scans
        switch (pat.kind) {
        case PatternKind::Universality:
            for (long long i = a; i < B; ++i)
                if (!holds(pat.p, i))
                    return false;
            return true;
        case PatternKind::Absence:
            return find_first(pat.p, a, b) < 0;
        case PatternKind::Existence:
            return find_first(pat.p, a, b) >= 0;
        case PatternKind::BoundedExistence: {
            int entries = 0;
            for (long long i = a; i < B; ++i) {
                if (holds(pat.p, i) && (i == a || !holds(pat.p, i - 1))) {
                    // In an unbounded window an entry inside the pure-loop
                    // region recurs forever.
                    if (b < 0 && i >= w.P + w.L)
                        return false;
                    ++entries;
                }
            }
            return entries <= pat.bound;
        }
        case PatternKind::Response:
            for (long long i = a; i < B; ++i)
                if (holds(pat.p, i) && find_first(pat.s, i, b) < 0)
                    return false;
            return true;
        case PatternKind::Precedence: {
            long long i0 = find_first(pat.p, a, b);
            return i0 < 0 || find_first(pat.s, a, i0 + 1) >= 0;
        }
        case PatternKind::ResponseChain:
            for (long long i = a; i < B; ++i) {
                if (!holds(pat.p, i))
                    continue;
                bool answered = false;
                long long jb = b >= 0 ? b : i + w.P + 2 * w.L + 2;
                for (long long j = i; j < jb && !answered; ++j)
                    answered = holds(pat.s, j) && find_first(pat.t, j + 1, b) >= 0;
                if (!answered)
                    return false;
            }
            return true;
        case PatternKind::PrecedenceChain: {
            long long i0 = find_first(pat.p, a, b);
            if (i0 < 0)
                return true;
            for (long long k = a + 1; k <= i0; ++k)
                if (holds(pat.t, k) && find_first(pat.s, a, k) >= 0)
                    return true;
            return false;
        }
        }
        return false; // unreachable
    }
};

} // namespace

bool window_oracle_eval(const FormulaFactory& f, const PspInstance& psp, const LassoTrace& trace) {
    Word w{f, trace, static_cast<long long>(trace.prefix.size()),
           static_cast<long long>(trace.loop.size())};
    if (w.L == 0)
        throw std::logic_error("window oracle: empty loop");
    Window win{w};
    const Pattern& pat = psp.pattern;

    switch (psp.scope.kind) {
    case ScopeKind::Globally:
        return win.pattern(pat, 0, -1);
    case ScopeKind::Before: {
        long long j = win.find_first(psp.scope.q, 0, -1);
        return j < 0 || win.pattern(pat, 0, j);
    }
    case ScopeKind::After: {
        long long i = win.find_first(psp.scope.q, 0, -1);
        return i < 0 || win.pattern(pat, i, -1);
    }
    case ScopeKind::Between:
    case ScopeKind::AfterUntil: {
        for (long long a = 0; a < w.P + w.L; ++a) {
            if (!win.holds(psp.scope.q, a) || win.holds(psp.scope.r, a))
                continue;
            long long j = win.find_first(psp.scope.r, a + 1, -1);
            if (j < 0 && psp.scope.kind == ScopeKind::Between)
                continue;
            if (!win.pattern(pat, a, j))
                return false;
        }
        return true;
    }
    }
    return false; // unreachable
}

} // namespace reqlint::testgen
