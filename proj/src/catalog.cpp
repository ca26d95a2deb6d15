// ============================================================================
// catalog.cpp — (scope, pattern) -> LTL mapping
// ============================================================================

#include "reqlint/catalog.hpp"

#include "reqlint/errors.hpp"

namespace reqlint {

namespace {

// Small builder wrapper so the table below reads close to the catalog's
// notation. W is weak until: a W b == (a U b) | G a.
struct B {
    FormulaFactory& f;
    FormulaId Not(FormulaId a) const { return f.negation(a); }
    FormulaId And(FormulaId a, FormulaId b) const { return f.conj(a, b); }
    FormulaId Or(FormulaId a, FormulaId b) const { return f.disj(a, b); }
    FormulaId Imp(FormulaId a, FormulaId b) const { return f.implies(a, b); }
    FormulaId X(FormulaId a) const { return f.next(a); }
    FormulaId F(FormulaId a) const { return f.eventually(a); }
    FormulaId G(FormulaId a) const { return f.globally(a); }
    FormulaId U(FormulaId a, FormulaId b) const { return f.until(a, b); }
    FormulaId W(FormulaId a, FormulaId b) const { return f.weak_until(a, b); }
};

// Bounded existence core for infinite windows: at most k maximal intervals
// where p holds. Nesting for k=2 reproduces the catalog instance
// !p W (p W (!p W (p W G !p))).
FormulaId bounded_core_infinite(const B& b, FormulaId p, int k) {
    FormulaId acc = b.G(b.Not(p)); // zero further p-intervals
    for (int i = 0; i < k; ++i) acc = b.W(b.Not(p), b.W(p, acc));
    return acc;
}

// Bounded existence inside a window that is guaranteed to close at r: the
// alternation of (!p & !r) / (p & !r) segments may be cut off by r at any
// point. Reproduces the catalog's Before/Between k=2 nesting.
FormulaId bounded_core_until(const B& b, FormulaId p, FormulaId r, int k) {
    FormulaId acc = b.U(b.Not(p), r);
    for (int i = 0; i < k; ++i) {
        acc = b.U(b.And(p, b.Not(r)), b.Or(r, acc));
        acc = b.U(b.And(b.Not(p), b.Not(r)), b.Or(r, acc));
    }
    return acc;
}

// Weak variant for After-until windows, which may never close: every until
// that waits for the next alternation point is weakened.
FormulaId bounded_core_weak(const B& b, FormulaId p, FormulaId r, int k) {
    FormulaId acc = b.W(b.Not(p), r);
    for (int i = 0; i < k; ++i) {
        acc = b.W(b.And(p, b.Not(r)), b.Or(r, acc));
        acc = b.W(b.And(b.Not(p), b.Not(r)), b.Or(r, acc));
    }
    return acc;
}

} // namespace

FormulaId psp_to_ltl(FormulaFactory& f, const PspInstance& psp) {
    const B b{f};
    const Pattern& pat = psp.pattern;
    const FormulaId p = pat.p, s = pat.s, t = pat.t;
    const FormulaId q = psp.scope.q, r = psp.scope.r;

    switch (psp.scope.kind) {
        // ── Globally ────────────────────────────────────────────────────────
        case ScopeKind::Globally:
            switch (pat.kind) {
                case PatternKind::Universality: return b.G(p);
                case PatternKind::Absence: return b.G(b.Not(p));
                case PatternKind::Existence: return b.F(p);
                case PatternKind::BoundedExistence:
                    return bounded_core_infinite(b, p, pat.bound);
                case PatternKind::Response: return b.G(b.Imp(p, b.F(s)));
                case PatternKind::Precedence: return b.W(b.Not(p), s);
                case PatternKind::ResponseChain:
                    return b.G(b.Imp(p, b.F(b.And(s, b.X(b.F(t))))));
                case PatternKind::PrecedenceChain:
                    return b.Imp(b.F(p),
                                 b.U(b.Not(p), b.And(s, b.And(b.Not(p), b.X(b.U(b.Not(p), t))))));
            }
            break;

        // ── Before r ────────────────────────────────────────────────────────
        case ScopeKind::Before: {
            const FormulaId d = q; // the single delimiter closes the scope
            switch (pat.kind) {
                case PatternKind::Universality: return b.Imp(b.F(d), b.U(p, d));
                case PatternKind::Absence: return b.Imp(b.F(d), b.U(b.Not(p), d));
                case PatternKind::Existence: return b.W(b.Not(d), b.And(p, b.Not(d)));
                case PatternKind::BoundedExistence:
                    return b.Imp(b.F(d), bounded_core_until(b, p, d, pat.bound));
                case PatternKind::Response:
                    return b.Imp(b.F(d), b.U(b.Imp(p, b.U(b.Not(d), b.And(s, b.Not(d)))), d));
                case PatternKind::Precedence: return b.Imp(b.F(d), b.U(b.Not(p), b.Or(s, d)));
                case PatternKind::ResponseChain:
                    return b.Imp(
                        b.F(d),
                        b.U(b.Imp(p, b.U(b.Not(d),
                                         b.And(s, b.And(b.Not(d),
                                                        b.X(b.U(b.Not(d), b.And(t, b.Not(d)))))))),
                            d));
                case PatternKind::PrecedenceChain:
                    return b.Imp(
                        b.F(d),
                        b.U(b.And(b.Not(p), b.Not(d)),
                            b.Or(d, b.And(s, b.And(b.Not(p),
                                                   b.And(b.Not(d),
                                                         b.X(b.U(b.And(b.Not(p), b.Not(d)),
                                                                 b.And(t, b.Not(d))))))))));
            }
            break;
        }

        // ── After q ─────────────────────────────────────────────────────────
        case ScopeKind::After:
            switch (pat.kind) {
                case PatternKind::Universality: return b.G(b.Imp(q, b.G(p)));
                case PatternKind::Absence: return b.G(b.Imp(q, b.G(b.Not(p))));
                case PatternKind::Existence: return b.Or(b.G(b.Not(q)), b.F(b.And(q, b.F(p))));
                case PatternKind::BoundedExistence:
                    return b.Imp(b.F(q),
                                 b.U(b.Not(q), b.And(q, bounded_core_infinite(b, p, pat.bound))));
                case PatternKind::Response: return b.G(b.Imp(q, b.G(b.Imp(p, b.F(s)))));
                case PatternKind::Precedence:
                    return b.Or(b.G(b.Not(q)), b.U(b.Not(q), b.And(q, b.W(b.Not(p), s))));
                case PatternKind::ResponseChain:
                    return b.G(b.Imp(q, b.G(b.Imp(p, b.F(b.And(s, b.X(b.F(t))))))));
                case PatternKind::PrecedenceChain:
                    return b.Or(
                        b.G(b.Not(q)),
                        b.U(b.Not(q),
                            b.And(q, b.Imp(b.F(p),
                                           b.U(b.Not(p),
                                               b.And(s, b.And(b.Not(p),
                                                              b.X(b.U(b.Not(p), t)))))))));
            }
            break;

        // ── Between q and r ─────────────────────────────────────────────────
        case ScopeKind::Between: {
            const FormulaId guard = b.And(q, b.And(b.Not(r), b.F(r)));
            switch (pat.kind) {
                case PatternKind::Universality: return b.G(b.Imp(guard, b.U(p, r)));
                case PatternKind::Absence: return b.G(b.Imp(guard, b.U(b.Not(p), r)));
                case PatternKind::Existence:
                    return b.G(b.Imp(b.And(q, b.Not(r)), b.W(b.Not(r), b.And(p, b.Not(r)))));
                case PatternKind::BoundedExistence:
                    return b.G(b.Imp(guard, bounded_core_until(b, p, r, pat.bound)));
                case PatternKind::Response:
                    return b.G(b.Imp(guard, b.U(b.Imp(p, b.U(b.Not(r), b.And(s, b.Not(r)))), r)));
                case PatternKind::Precedence:
                    return b.G(b.Imp(guard, b.U(b.Not(p), b.Or(s, r))));
                case PatternKind::ResponseChain:
                    return b.G(b.Imp(
                        guard,
                        b.U(b.Imp(p, b.U(b.Not(r),
                                         b.And(s, b.And(b.Not(r),
                                                        b.X(b.U(b.Not(r), b.And(t, b.Not(r)))))))),
                            r)));
                case PatternKind::PrecedenceChain:
                    return b.G(b.Imp(
                        guard,
                        b.U(b.And(b.Not(p), b.Not(r)),
                            b.Or(r, b.And(s, b.And(b.Not(p),
                                                   b.And(b.Not(r),
                                                         b.X(b.U(b.And(b.Not(p), b.Not(r)),
                                                                 b.And(t, b.Not(r)))))))))));
            }
            break;
        }

        // ── After q until r ─────────────────────────────────────────────────
        case ScopeKind::AfterUntil: {
            const FormulaId guard = b.And(q, b.Not(r));
            switch (pat.kind) {
                case PatternKind::Universality: return b.G(b.Imp(guard, b.W(p, r)));
                case PatternKind::Absence: return b.G(b.Imp(guard, b.W(b.Not(p), r)));
                case PatternKind::Existence:
                    return b.G(b.Imp(guard, b.U(b.Not(r), b.And(p, b.Not(r)))));
                case PatternKind::BoundedExistence:
                    return b.G(b.Imp(guard, bounded_core_weak(b, p, r, pat.bound)));
                case PatternKind::Response:
                    return b.G(b.Imp(guard, b.W(b.Imp(p, b.U(b.Not(r), b.And(s, b.Not(r)))), r)));
                case PatternKind::Precedence:
                    return b.G(b.Imp(guard, b.W(b.Not(p), b.Or(s, r))));
                case PatternKind::ResponseChain:
                    return b.G(b.Imp(
                        guard,
                        b.W(b.Imp(p, b.U(b.Not(r),
                                         b.And(s, b.And(b.Not(r),
                                                        b.X(b.U(b.Not(r), b.And(t, b.Not(r)))))))),
                            r)));
                case PatternKind::PrecedenceChain:
                    return b.G(b.Imp(
                        guard,
                        b.W(b.And(b.Not(p), b.Not(r)),
                            b.Or(r, b.And(s, b.And(b.Not(p),
                                                   b.And(b.Not(r),
                                                         b.X(b.W(b.And(b.Not(p), b.Not(r)),
                                                                 b.And(t, b.Not(r)))))))))));
            }
            break;
        }
    }
    throw UnsupportedCombinationError("unsupported scope/pattern combination");
}

FormulaId conjoin(FormulaFactory& f, const std::vector<FormulaId>& translations) {
    return f.conj_all(translations);
}

} // namespace reqlint
