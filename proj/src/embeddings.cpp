#include "lpsem/embeddings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace lpsem {

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

AelTheory gelfond_embedding(const GroundProgram& p) {
    AelTheory t;
    t.vocab = p.n_atoms();
    t.formulas.reserve(p.rules.size());
    for (const GroundRule& r : p.rules) t.formulas.push_back({r.pos, r.naf, r.head});
    return t;
}

DefaultTheory mt_embedding(const GroundProgram& p) {
    DefaultTheory t;
    t.vocab = p.n_atoms();
    t.defaults.reserve(p.rules.size());
    for (const GroundRule& r : p.rules) t.defaults.push_back({r.pos, r.naf, r.head});
    return t;
}

// ---------------------------------------------------------------------------
// Stable expansions
// ---------------------------------------------------------------------------

namespace {

std::vector<AtomId> sorted_unique(std::vector<AtomId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// The objective kernel of a guess is a set of atom-implication clauses, so
// its entailed atoms are exactly the closure of forward chaining.
std::vector<bool> kernel_closure(const AelTheory& t, const std::vector<bool>& kept) {
    std::vector<bool> holds(t.vocab, false);
    bool changed = true;
    std::size_t iter = 0;
    while (changed) {
        if (iter++ > t.vocab + 1) throw Error("kernel closure failed to converge");
        changed = false;
        for (std::size_t i = 0; i < t.formulas.size(); ++i) {
            if (!kept[i]) continue;
            const AelFormula& f = t.formulas[i];
            if (holds[f.head]) continue;
            if (std::all_of(f.body.begin(), f.body.end(), [&](AtomId a) { return holds[a]; })) {
                holds[f.head] = true;
                changed = true;
            }
        }
    }
    return holds;
}

FormulaPtr kernel_formula(const AelFormula& f) {
    if (f.body.empty()) return make_atom(f.head);
    std::vector<FormulaPtr> conj;
    conj.reserve(f.body.size());
    for (AtomId a : f.body) conj.push_back(make_atom(a));
    FormulaPtr lhs = conj.size() == 1 ? std::move(conj.front()) : make_and(std::move(conj));
    return make_implies(std::move(lhs), make_atom(f.head));
}

} // namespace

std::vector<Expansion> ael_expansions(const AelTheory& t, std::size_t max_k_atoms,
                                      std::size_t max_atoms) {
    std::vector<AtomId> k_atoms;
    for (const AelFormula& f : t.formulas) {
        k_atoms.insert(k_atoms.end(), f.not_believed.begin(), f.not_believed.end());
    }
    k_atoms = sorted_unique(std::move(k_atoms));
    if (k_atoms.size() > max_k_atoms || k_atoms.size() >= 63) {
        throw CapError("expansion search over " + std::to_string(k_atoms.size()) +
                       " belief atoms exceeds the guess cap of " + std::to_string(max_k_atoms));
    }

    std::vector<Expansion> out;
    for (std::uint64_t guess = 0; guess < (std::uint64_t{1} << k_atoms.size()); ++guess) {
        std::vector<bool> believed(t.vocab, false);
        for (std::size_t i = 0; i < k_atoms.size(); ++i) {
            if (guess >> i & 1) believed[k_atoms[i]] = true;
        }
        // A formula survives into the kernel only if every ~K c in it is true
        // under the guess, i.e. no c is guessed believed.
        std::vector<bool> kept(t.formulas.size(), false);
        for (std::size_t i = 0; i < t.formulas.size(); ++i) {
            const auto& nb = t.formulas[i].not_believed;
            kept[i] = std::none_of(nb.begin(), nb.end(), [&](AtomId a) { return believed[a]; });
        }
        const std::vector<bool> entailed = kernel_closure(t, kept);
        const bool accepted = std::all_of(k_atoms.begin(), k_atoms.end(), [&](AtomId a) {
            return believed[a] == entailed[a];
        });
        if (!accepted) continue;

        Expansion e;
        for (std::size_t a = 0; a < t.vocab; ++a) {
            if (entailed[a]) e.believed_atoms.push_back(static_cast<AtomId>(a));
        }
        for (std::size_t i = 0; i < t.formulas.size(); ++i) {
            if (kept[i]) e.objective_kernel.push_back(kernel_formula(t.formulas[i]));
        }
        e.worlds.worlds = enumerate_models(e.objective_kernel, t.vocab, max_atoms);
        // Kernels in this fragment are sets of definite clauses, which the
        // all-true interpretation satisfies; an empty world set means the
        // implementation broke that guarantee.
        if (e.worlds.worlds.empty()) {
            throw std::logic_error("objective kernel unexpectedly inconsistent");
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const Expansion& a, const Expansion& b) {
        return a.believed_atoms < b.believed_atoms;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Reiter extensions
// ---------------------------------------------------------------------------

namespace {

// Closure of the defaults applicable w.r.t. the justification-check set:
// prerequisites are checked against the growing set, justifications against
// `against` only.
std::vector<bool> applicable_closure(const DefaultTheory& t, const std::vector<bool>& against) {
    std::vector<bool> holds(t.vocab, false);
    for (AtomId a : t.facts) holds[a] = true;
    bool changed = true;
    std::size_t iter = 0;
    while (changed) {
        if (iter++ > t.vocab + 1) throw Error("extension closure failed to converge");
        changed = false;
        for (const DefaultRule& d : t.defaults) {
            if (holds[d.consequent]) continue;
            const bool applicable =
                std::all_of(d.prerequisite.begin(), d.prerequisite.end(),
                            [&](AtomId a) { return holds[a]; }) &&
                std::none_of(d.justifications.begin(), d.justifications.end(),
                             [&](AtomId a) { return against[a]; });
            if (applicable) {
                holds[d.consequent] = true;
                changed = true;
            }
        }
    }
    return holds;
}

} // namespace

std::vector<Extension> dl_extensions(const DefaultTheory& t, std::size_t max_guess_atoms) {
    std::vector<AtomId> j_atoms;
    for (const DefaultRule& d : t.defaults) {
        j_atoms.insert(j_atoms.end(), d.justifications.begin(), d.justifications.end());
    }
    j_atoms = sorted_unique(std::move(j_atoms));
    if (j_atoms.size() > max_guess_atoms || j_atoms.size() >= 63) {
        throw CapError("extension search over " + std::to_string(j_atoms.size()) +
                       " justification atoms exceeds the guess cap of " +
                       std::to_string(max_guess_atoms));
    }

    std::vector<Extension> out;
    for (std::uint64_t guess = 0; guess < (std::uint64_t{1} << j_atoms.size()); ++guess) {
        std::vector<bool> against(t.vocab, false);
        for (std::size_t i = 0; i < j_atoms.size(); ++i) {
            if (guess >> i & 1) against[j_atoms[i]] = true;
        }
        const std::vector<bool> closure = applicable_closure(t, against);
        // The closure only consulted the guess for justifications, so it is
        // an extension exactly when the guess got those atoms right.
        const bool accepted = std::all_of(j_atoms.begin(), j_atoms.end(), [&](AtomId a) {
            return against[a] == closure[a];
        });
        if (!accepted) continue;
        Extension e;
        for (std::size_t a = 0; a < t.vocab; ++a) {
            if (closure[a]) e.atoms.push_back(static_cast<AtomId>(a));
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const Extension& a, const Extension& b) { return a.atoms < b.atoms; });
    return out;
}

} // namespace lpsem
