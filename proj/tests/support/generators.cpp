// ============================================================================
// generators.cpp — seeded random inputs for the test suite
// ============================================================================
#include "support/generators.hpp"

#include <array>
#include <sstream>

namespace reqlint::testgen {

int pick_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

bool chance(Rng& rng, int percent) { return pick_int(rng, 1, 100) <= percent; }

const std::array<const char*, 3> kProps = {"p", "q", "r"};

FormulaId random_literal(FormulaFactory& f, Rng& rng, int max_props) {
    if (chance(rng, 8))
        return chance(rng, 50) ? f.truth() : f.falsity();
    FormulaId atom = f.prop(kProps[static_cast<std::size_t>(pick_int(rng, 0, max_props - 1))]);
    return chance(rng, 40) ? f.negation(atom) : atom;
}

// Shared recursion for the NNF and constraint generators; `leaf` supplies
// the atoms.
template <typename LeafFn>
FormulaId nnf_rec(FormulaFactory& f, Rng& rng, int budget, LeafFn&& leaf) {
    if (budget <= 1)
        return leaf();
    // 0..2 binary, 3..6 unary temporal
    int op = budget >= 3 ? pick_int(rng, 0, 6) : pick_int(rng, 3, 6);
    if (op <= 2) {
        int left = pick_int(rng, 1, budget - 2);
        FormulaId a = nnf_rec(f, rng, left, leaf);
        FormulaId b = nnf_rec(f, rng, budget - 1 - left, leaf);
        switch (op) {
        case 0: return f.conj(a, b);
        case 1: return f.disj(a, b);
        default: return chance(rng, 50) ? f.until(a, b) : f.release(a, b);
        }
    }
    FormulaId c = nnf_rec(f, rng, budget - 1, leaf);
    switch (op) {
    case 3: return f.next(c);
    case 4: return f.eventually(c);
    case 5: return f.globally(c);
    default: return chance(rng, 50) ? f.eventually(c) : f.globally(c);
    }
}

} // namespace

FormulaId random_nnf_formula(FormulaFactory& f, Rng& rng, int max_props, int max_size) {
    int budget = pick_int(rng, 1, max_size);
    return nnf_rec(f, rng, budget, [&] { return random_literal(f, rng, max_props); });
}

FormulaId random_formula(FormulaFactory& f, Rng& rng, int max_props, int max_size) {
    int budget = pick_int(rng, 1, max_size);
    // Recursive lambda via explicit self-passing.
    struct Gen {
        FormulaFactory& f;
        Rng& rng;
        int max_props;
        FormulaId go(int budget) {
            if (budget <= 1)
                return random_literal(f, rng, max_props);
            int op = budget >= 3 ? pick_int(rng, 0, 7) : pick_int(rng, 4, 7);
            if (op <= 3) {
                int left = pick_int(rng, 1, budget - 2);
                FormulaId a = go(left);
                FormulaId b = go(budget - 1 - left);
                switch (op) {
                case 0: return f.conj(a, b);
                case 1: return f.disj(a, b);
                case 2: return f.implies(a, b);
                default: return rng() % 2 == 0 ? f.until(a, b) : f.release(a, b);
                }
            }
            FormulaId c = go(budget - 1);
            switch (op) {
            case 4: return f.negation(c);
            case 5: return f.next(c);
            case 6: return f.eventually(c);
            default: return f.globally(c);
            }
        }
    } gen{f, rng, max_props};
    return gen.go(budget);
}

FormulaId random_constraint_formula(FormulaFactory& f, Rng& rng, int max_vars,
                                    int max_consts, int max_size) {
    // Fixed per-variable constant pools; mixing integers and a non-integer
    // keeps region representatives interesting.
    static const std::array<const char*, 2> vars = {"x", "y"};
    auto constant = [&](int v) {
        if (v == 0)
            return pick_int(rng, 0, max_consts - 1) == 0 ? Rational(10) : Rational(20);
        return pick_int(rng, 0, max_consts - 1) == 0 ? Rational(1, 2) : Rational(3);
    };
    auto leaf = [&]() -> FormulaId {
        if (chance(rng, 35)) {
            FormulaId b = f.prop("b");
            return chance(rng, 40) ? f.negation(b) : b;
        }
        int v = pick_int(rng, 0, max_vars - 1);
        CmpRel rel = chance(rng, 60) ? CmpRel::Lt : CmpRel::Eq;
        FormulaId atom = f.cmp(vars[static_cast<std::size_t>(v)], rel, constant(v));
        return chance(rng, 35) ? f.negation(atom) : atom;
    };
    int budget = pick_int(rng, 1, max_size);
    return nnf_rec(f, rng, budget, leaf);
}

LassoTrace random_trace(Rng& rng, const std::vector<std::string>& props,
                        int max_prefix, int max_loop) {
    LassoTrace t;
    int prefix = pick_int(rng, 0, max_prefix);
    int loop = pick_int(rng, 1, max_loop);
    auto state = [&] {
        TraceState s;
        for (const std::string& p : props)
            s.props[p] = chance(rng, 50);
        return s;
    };
    for (int i = 0; i < prefix; ++i)
        t.prefix.push_back(state());
    for (int i = 0; i < loop; ++i)
        t.loop.push_back(state());
    return t;
}

PspInstance random_psp(FormulaFactory& f, Rng& rng, const std::vector<std::string>& atoms) {
    auto atom_at = [&](int i) { return f.prop(atoms[static_cast<std::size_t>(i)]); };
    auto payload = [&]() -> FormulaId {
        int i = pick_int(rng, 0, static_cast<int>(atoms.size()) - 1);
        int roll = pick_int(rng, 1, 100);
        if (roll <= 55)
            return atom_at(i);
        if (roll <= 75)
            return f.negation(atom_at(i));
        int j = pick_int(rng, 0, static_cast<int>(atoms.size()) - 1);
        return roll <= 88 ? f.conj(atom_at(i), atom_at(j)) : f.disj(atom_at(i), atom_at(j));
    };
    auto delimiter = [&]() -> FormulaId {
        int i = pick_int(rng, 0, static_cast<int>(atoms.size()) - 1);
        return chance(rng, 25) ? f.negation(atom_at(i)) : atom_at(i);
    };

    PspInstance psp;
    psp.scope.kind = static_cast<ScopeKind>(pick_int(rng, 0, 4));
    if (psp.scope.kind != ScopeKind::Globally)
        psp.scope.q = delimiter();
    if (psp.scope.kind == ScopeKind::Between || psp.scope.kind == ScopeKind::AfterUntil)
        psp.scope.r = delimiter();

    psp.pattern.kind = static_cast<PatternKind>(pick_int(rng, 0, 7));
    psp.pattern.p = payload();
    switch (psp.pattern.kind) {
    case PatternKind::BoundedExistence:
        psp.pattern.bound = pick_int(rng, 1, 3);
        break;
    case PatternKind::Response:
    case PatternKind::Precedence:
        psp.pattern.s = payload();
        break;
    case PatternKind::ResponseChain:
    case PatternKind::PrecedenceChain:
        psp.pattern.s = payload();
        psp.pattern.t = payload();
        break;
    default:
        break;
    }
    return psp;
}

RequirementSet random_requirement_set(FormulaFactory& f, Rng& rng, int n) {
    RequirementSet set;
    for (int i = 0; i < n; ++i) {
        PspInstance psp;
        psp.scope.kind = ScopeKind::Globally;
        FormulaId a = f.prop(kProps[static_cast<std::size_t>(pick_int(rng, 0, 2))]);
        FormulaId b = f.prop(kProps[static_cast<std::size_t>(pick_int(rng, 0, 2))]);
        switch (pick_int(rng, 0, 4)) {
        case 0:
            psp.pattern.kind = PatternKind::Universality;
            psp.pattern.p = chance(rng, 35) ? f.negation(a) : a;
            break;
        case 1:
            psp.pattern.kind = PatternKind::Absence;
            psp.pattern.p = chance(rng, 35) ? f.negation(a) : a;
            break;
        case 2:
            psp.pattern.kind = PatternKind::Existence;
            psp.pattern.p = chance(rng, 35) ? f.negation(a) : a;
            break;
        case 3:
            psp.pattern.kind = PatternKind::Response;
            psp.pattern.p = a;
            psp.pattern.s = chance(rng, 35) ? f.negation(b) : b;
            break;
        default:
            psp.pattern.kind = PatternKind::Precedence;
            psp.pattern.p = a;
            psp.pattern.s = b;
            break;
        }
        Requirement req;
        req.id = "R" + std::to_string(i + 1);
        req.psp = psp;
        req.source_text = pretty_sentence(f, psp);
        req.line = static_cast<std::size_t>(i + 1);
        set.requirements.push_back(std::move(req));
    }
    return set;
}

std::string large_corpus_text() {
    std::ostringstream out;
    out << "# load test corpus: 100 requirements over 30 variables\n";
    int id = 1;
    auto b = [](int i) { return "b" + std::to_string(((i % 25) + 25) % 25); };
    auto nvar = [](int i) { return "n" + std::to_string(((i % 5) + 5) % 5); };
    // 40 responses chaining the boolean vocabulary together.
    for (int i = 0; i < 40; ++i)
        out << "R" << id++ << " : Globally, it is always the case that if " << b(i)
            << " holds, then " << b(i + 7) << " eventually holds.\n";
    // 20 precedences.
    for (int i = 0; i < 20; ++i)
        out << "R" << id++ << " : Globally, it is always the case that if " << b(i + 3)
            << " holds, then " << b(i) << " previously held.\n";
    // 15 absences guarding numeric thresholds.
    for (int i = 0; i < 15; ++i)
        out << "R" << id++ << " : Globally, it is never the case that " << nvar(i)
            << " < " << (10 + 10 * (i % 2)) << " and " << b(i) << " holds.\n";
    // 10 scoped existences; their triggers stay off in the easy model.
    for (int i = 0; i < 10; ++i)
        out << "R" << id++ << " : After " << b(i) << ", " << nvar(i) << " < 5 eventually holds.\n";
    // 15 response chains.
    for (int i = 0; i < 15; ++i)
        out << "R" << id++ << " : Globally, it is always the case that if " << b(i)
            << " holds, then " << b(i + 11) << " eventually holds and is succeeded by "
            << b(i + 13) << ".\n";
    return out.str();
}

} // namespace reqlint::testgen
