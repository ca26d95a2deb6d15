// ============================================================================
// analyses.cpp — requirement-set analyses
// ============================================================================

#include "reqlint/analyses.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "reqlint/catalog.hpp"

namespace reqlint {

namespace {

std::vector<FormulaId> translate_all(FormulaFactory& f, const RequirementSet& set) {
    std::vector<FormulaId> out;
    out.reserve(set.requirements.size());
    for (const Requirement& r : set.requirements)
        out.push_back(psp_to_ltl(f, r.psp));
    return out;
}

} // namespace

// ── consistency ─────────────────────────────────────────────────────────────

ConsistencyOutcome check_consistency(FormulaFactory& f, const RequirementSet& set,
                                     const EngineLimits& limits) {
    ConsistencyOutcome out;
    out.translations = translate_all(f, set);
    FormulaId whole = f.conj_all(out.translations);
    out.abstraction = build_abstraction(f, whole);
    SatVerdict v =
        check_sat(f, f.conj(out.abstraction.q_m, out.abstraction.phi_prime), limits);
    out.verdict = v.result;
    out.stats = v.stats;
    if (v.witness)
        out.witness = concretize_witness(*v.witness, out.abstraction.map);
    return out;
}

// ── minimal inconsistent core ───────────────────────────────────────────────

MusOutcome explain_inconsistency(FormulaFactory& f, const RequirementSet& set,
                                 const EngineLimits& limits) {
    MusOutcome out;
    const std::size_t n = set.requirements.size();
    IncrementalChecker checker(f, translate_all(f, set), limits);

    // kept[i]: r_i is still in the working set.
    std::vector<bool> kept(n, true);
    auto excluded_with = [&](std::size_t extra_drop) {
        std::vector<std::size_t> ex;
        for (std::size_t j = 0; j < n; ++j)
            if (!kept[j] || j == extra_drop)
                ex.push_back(j);
        return ex;
    };

    for (std::size_t i = 0; i < n; ++i) {
        SatVerdict v = checker.check(excluded_with(i));
        ++out.checks;
        if (v.result == SatResult::Unsatisfiable) {
            kept[i] = false; // redundant: the rest is inconsistent on its own
        } else if (v.result == SatResult::Indeterminate) {
            out.complete = false;
            break;
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        if (kept[i])
            out.ids.push_back(set.requirements[i].id);

#ifndef NDEBUG
    if (out.complete) {
        std::vector<std::size_t> drop_rest;
        for (std::size_t j = 0; j < n; ++j)
            if (!kept[j])
                drop_rest.push_back(j);
        assert(checker.check(drop_rest).result == SatResult::Unsatisfiable);
        for (std::size_t i = 0; i < n; ++i) {
            if (!kept[i])
                continue;
            SatVerdict v = checker.check(excluded_with(i));
            assert(v.result != SatResult::Unsatisfiable);
        }
    }
#endif
    return out;
}

// ── vacuity ─────────────────────────────────────────────────────────────────

std::vector<VacuityFinding> check_vacuity(FormulaFactory& f, const RequirementSet& set,
                                          const EngineLimits& limits) {
    std::vector<VacuityFinding> findings;
    IncrementalChecker checker(f, translate_all(f, set), limits);
    for (const Requirement& r : set.requirements) {
        if (!pattern_has_trigger(r.psp.pattern.kind))
            continue;
        VacuityFinding fd;
        fd.id = r.id;
        fd.trigger = r.psp.pattern.p;
        AbstractionResult abs;
        SatVerdict v = checker.check({}, {f.eventually(fd.trigger)}, &abs);
        switch (v.result) {
        case SatResult::Unsatisfiable:
            fd.status = VacuityStatus::Vacuous;
            break;
        case SatResult::Satisfiable:
            fd.status = VacuityStatus::NonVacuous;
            fd.witness = concretize_witness(*v.witness, abs.map);
            break;
        case SatResult::Indeterminate:
            fd.status = VacuityStatus::Indeterminate;
            break;
        }
        findings.push_back(std::move(fd));
    }
    return findings;
}

// ── connectivity ────────────────────────────────────────────────────────────

DependencyGraph build_dependency_graph(FormulaFactory& f, const RequirementSet& set) {
    DependencyGraph g;
    std::vector<std::set<std::string>> names;
    for (const Requirement& r : set.requirements) {
        g.vertices.push_back(r.id);
        FormulaId t = psp_to_ltl(f, r.psp);
        std::set<std::string> ns;
        for (const std::string& p : collect_props(f, t))
            ns.insert(p);
        for (const std::string& x : collect_numeric_vars(f, t))
            ns.insert(x);
        names.push_back(std::move(ns));
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            bool shared = std::any_of(names[i].begin(), names[i].end(),
                                      [&](const std::string& n) {
                                          return names[j].count(n) != 0;
                                      });
            if (shared)
                g.edges.emplace_back(g.vertices[i], g.vertices[j]);
        }
    }
    return g;
}

std::vector<Component> check_connectivity(FormulaFactory& f, const RequirementSet& set) {
    DependencyGraph g = build_dependency_graph(f, set);
    const std::size_t n = g.vertices.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        index[g.vertices[i]] = i;

    // Union-find over vertex indices.
    std::vector<std::size_t> root(n);
    for (std::size_t i = 0; i < n; ++i)
        root[i] = i;
    auto find = [&](std::size_t x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    for (const auto& [a, b] : g.edges)
        root[find(index[a])] = find(index[b]);

    std::map<std::size_t, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < n; ++i)
        groups[find(i)].push_back(g.vertices[i]);

    std::vector<Component> components;
    for (auto& [_, ids] : groups) {
        Component c;
        std::sort(ids.begin(), ids.end());
        c.ids = std::move(ids);
        components.push_back(std::move(c));
    }
    std::sort(components.begin(), components.end(),
              [](const Component& a, const Component& b) {
                  if (a.ids.size() != b.ids.size())
                      return a.ids.size() < b.ids.size();
                  return a.ids.front() < b.ids.front();
              });
    if (components.size() > 1) {
        std::size_t min_size = components.front().ids.size();
        for (Component& c : components)
            c.flagged = (c.ids.size() == min_size);
    }
    return components;
}

} // namespace reqlint
