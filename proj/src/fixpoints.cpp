#include "lpsem/fixpoints.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "lpsem/completion.hpp"

namespace lpsem {

// ---------------------------------------------------------------------------
// PartialInterpretation
// ---------------------------------------------------------------------------

PartialInterpretation::PartialInterpretation(std::size_t vocab, std::vector<AtomId> true_atoms,
                                             std::vector<AtomId> false_atoms)
    : values_(vocab, Truth::Unknown) {
    for (AtomId a : true_atoms) {
        if (a >= vocab) throw Error("partial interpretation atom out of vocabulary");
        values_[a] = Truth::True;
    }
    for (AtomId a : false_atoms) {
        if (a >= vocab) throw Error("partial interpretation atom out of vocabulary");
        if (values_[a] == Truth::True) {
            throw Error("partial interpretation marks an atom both true and false");
        }
        values_[a] = Truth::False;
    }
}

PartialInterpretation::PartialInterpretation(std::vector<Truth> values)
    : values_(std::move(values)) {}

Truth PartialInterpretation::value(AtomId a) const {
    if (a >= values_.size()) throw Error("partial interpretation atom out of vocabulary");
    return values_[a];
}

namespace {

std::vector<AtomId> atoms_with(const std::vector<Truth>& vals, Truth t) {
    std::vector<AtomId> out;
    for (std::size_t a = 0; a < vals.size(); ++a) {
        if (vals[a] == t) out.push_back(static_cast<AtomId>(a));
    }
    return out;
}

} // namespace

std::vector<AtomId> PartialInterpretation::true_atoms() const {
    return atoms_with(values_, Truth::True);
}

std::vector<AtomId> PartialInterpretation::false_atoms() const {
    return atoms_with(values_, Truth::False);
}

std::vector<AtomId> PartialInterpretation::undefined_atoms() const {
    return atoms_with(values_, Truth::Unknown);
}

bool PartialInterpretation::is_total() const {
    return std::none_of(values_.begin(), values_.end(),
                        [](Truth t) { return t == Truth::Unknown; });
}

bool PartialInterpretation::knowledge_leq(const PartialInterpretation& other) const {
    if (values_.size() != other.values_.size()) {
        throw Error("knowledge comparison across different vocabularies");
    }
    for (std::size_t a = 0; a < values_.size(); ++a) {
        if (values_[a] != Truth::Unknown && values_[a] != other.values_[a]) return false;
    }
    return true;
}

bool PartialInterpretation::operator<(const PartialInterpretation& other) const {
    const auto lhs = std::make_pair(true_atoms(), false_atoms());
    const auto rhs = std::make_pair(other.true_atoms(), other.false_atoms());
    return lhs < rhs;
}

// ---------------------------------------------------------------------------
// Two-valued fixpoints
// ---------------------------------------------------------------------------

Interpretation tp_step(const GroundProgram& p, const Interpretation& i) {
    std::vector<AtomId> heads;
    for (const GroundRule& r : p.rules) {
        const bool fires =
            std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return i.contains(a); }) &&
            std::none_of(r.naf.begin(), r.naf.end(), [&](AtomId a) { return i.contains(a); });
        if (fires) heads.push_back(r.head);
    }
    return Interpretation(p.n_atoms(), std::move(heads));
}

Interpretation least_model(const GroundProgram& p) {
    for (const GroundRule& r : p.rules) {
        if (!r.naf.empty()) {
            const std::string lit = "not " + p.atom_name(r.naf.front());
            throw NotDefiniteError("least model requires a definite program, found '" + lit + "'",
                                   lit);
        }
    }
    Interpretation cur(p.n_atoms(), {});
    for (std::size_t iter = 0; iter <= p.n_atoms() + 1; ++iter) {
        Interpretation next = tp_step(p, cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw Error("least model iteration failed to converge within its bound");
}

GroundProgram gl_reduct(const GroundProgram& p, const Interpretation& m) {
    GroundProgram out;
    out.base = p.base;
    out.atom_pred = p.atom_pred;
    out.predicates = p.predicates;
    for (const GroundRule& r : p.rules) {
        const bool refuted =
            std::any_of(r.naf.begin(), r.naf.end(), [&](AtomId a) { return m.contains(a); });
        if (!refuted) out.rules.push_back(GroundRule{r.head, r.pos, {}});
    }
    return out;
}

std::vector<Interpretation> stable_models(const GroundProgram& p, std::size_t max_atoms) {
    std::vector<Interpretation> out;
    for (const Interpretation& m : supported_models(p, max_atoms)) {
        if (least_model(gl_reduct(p, m)) == m) out.push_back(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fitting model
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> rules_by_head(const GroundProgram& p) {
    std::vector<std::vector<std::size_t>> by_head(p.n_atoms());
    for (std::size_t i = 0; i < p.rules.size(); ++i) by_head[p.rules[i].head].push_back(i);
    return by_head;
}

Truth body_value3(const GroundRule& r, const std::vector<Truth>& vals) {
    Truth t = Truth::True;
    for (AtomId a : r.pos) t = kleene_and(t, vals[a]);
    for (AtomId a : r.naf) t = kleene_and(t, kleene_not(vals[a]));
    return t;
}

} // namespace

PartialInterpretation fitting_model(const GroundProgram& p) {
    const auto by_head = rules_by_head(p);
    std::vector<Truth> vals(p.n_atoms(), Truth::Unknown);
    for (std::size_t iter = 0; iter <= p.n_atoms() + 1; ++iter) {
        std::vector<Truth> next(p.n_atoms(), Truth::False);
        for (std::size_t a = 0; a < p.n_atoms(); ++a) {
            for (std::size_t ri : by_head[a]) {
                next[a] = kleene_or(next[a], body_value3(p.rules[ri], vals));
            }
        }
        if (next == vals) return PartialInterpretation(std::move(vals));
        vals = std::move(next);
    }
    throw Error("three-valued fixpoint failed to converge within its bound");
}

// ---------------------------------------------------------------------------
// Well-founded model
// ---------------------------------------------------------------------------

PartialInterpretation well_founded_model(const GroundProgram& p) {
    const auto stage = [&](const Interpretation& x) { return least_model(gl_reduct(p, x)); };
    Interpretation t(p.n_atoms(), {});
    for (std::size_t iter = 0; iter <= p.n_atoms() + 1; ++iter) {
        Interpretation next = stage(stage(t));
        if (next == t) {
            const Interpretation upper = stage(t);
            std::vector<AtomId> false_atoms;
            for (std::size_t a = 0; a < p.n_atoms(); ++a) {
                if (!upper.contains(static_cast<AtomId>(a))) {
                    false_atoms.push_back(static_cast<AtomId>(a));
                }
            }
            return PartialInterpretation(p.n_atoms(), t.atoms(), std::move(false_atoms));
        }
        t = std::move(next);
    }
    throw Error("alternating fixpoint failed to converge within its bound");
}

// ---------------------------------------------------------------------------
// Partial stable models
// ---------------------------------------------------------------------------

namespace {

// Truth-least three-valued model of the reduct of p by m: each naf literal
// becomes the constant complement of its atom's value in m, then the least
// model of the now naf-free rules is the limit of the one-step operator
// iterated upward from all-false.
std::vector<Truth> reduct_least_model(const GroundProgram& p,
                                      const std::vector<std::vector<std::size_t>>& by_head,
                                      const std::vector<Truth>& m) {
    std::vector<Truth> constants(p.rules.size(), Truth::True);
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        for (AtomId a : p.rules[i].naf) {
            constants[i] = kleene_and(constants[i], kleene_not(m[a]));
        }
    }
    std::vector<Truth> vals(p.n_atoms(), Truth::False);
    for (std::size_t iter = 0; iter <= 2 * p.n_atoms() + 2; ++iter) {
        std::vector<Truth> next(p.n_atoms(), Truth::False);
        for (std::size_t a = 0; a < p.n_atoms(); ++a) {
            for (std::size_t ri : by_head[a]) {
                Truth body = constants[ri];
                for (AtomId b : p.rules[ri].pos) body = kleene_and(body, vals[b]);
                next[a] = kleene_or(next[a], body);
            }
        }
        if (next == vals) return vals;
        vals = std::move(next);
    }
    throw Error("reduct least-model iteration failed to converge within its bound");
}

} // namespace

std::vector<PartialInterpretation> partial_stable_models(const GroundProgram& p,
                                                         std::size_t max_atoms) {
    const std::size_t n = p.n_atoms();
    if (n > max_atoms) {
        throw CapError("partial stable search over " + std::to_string(n) +
                       " atoms exceeds the three-valued cap of " + std::to_string(max_atoms));
    }
    const auto by_head = rules_by_head(p);
    std::vector<PartialInterpretation> out;
    std::vector<Truth> m(n, Truth::False);
    for (;;) {
        if (reduct_least_model(p, by_head, m) == m) out.emplace_back(m);
        // Advance the base-3 odometer over truth assignments.
        std::size_t i = 0;
        while (i < n && m[i] == Truth::True) m[i++] = Truth::False;
        if (i == n) break;
        m[i] = m[i] == Truth::False ? Truth::Unknown : Truth::True;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Stratification
// ---------------------------------------------------------------------------

namespace {

struct PredGraph {
    // Adjacency by predicate index; second element true for a negative edge.
    std::vector<std::vector<std::pair<std::size_t, bool>>> edges;
};

PredGraph predicate_graph(const GroundProgram& p) {
    PredGraph g;
    g.edges.resize(p.predicates.size());
    auto add = [&](std::size_t from, std::size_t to, bool negative) {
        auto& row = g.edges[from];
        if (std::find(row.begin(), row.end(), std::make_pair(to, negative)) == row.end()) {
            row.emplace_back(to, negative);
        }
    };
    for (const GroundRule& r : p.rules) {
        const std::size_t hp = p.atom_pred[r.head];
        for (AtomId a : r.pos) add(hp, p.atom_pred[a], false);
        for (AtomId a : r.naf) add(hp, p.atom_pred[a], true);
    }
    return g;
}

// Iterative Tarjan; returns the component index of each predicate.
std::vector<std::size_t> strongly_connected_components(const PredGraph& g) {
    const std::size_t n = g.edges.size();
    std::vector<std::size_t> index(n, SIZE_MAX), lowlink(n, 0), comp(n, SIZE_MAX);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0, n_comps = 0;

    struct Frame {
        std::size_t v;
        std::size_t child = 0;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != SIZE_MAX) continue;
        std::vector<Frame> frames{{root}};
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < g.edges[f.v].size()) {
                const std::size_t w = g.edges[f.v][f.child++].first;
                if (index[w] == SIZE_MAX) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    for (;;) {
                        const std::size_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = n_comps;
                        if (w == f.v) break;
                    }
                    ++n_comps;
                }
                const std::size_t v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                }
            }
        }
    }
    return comp;
}

// Shortest path from `from` to `to` through one strongly connected component,
// as a predicate index sequence starting at `from` and ending at `to`.
std::vector<std::size_t> path_within_component(const PredGraph& g,
                                               const std::vector<std::size_t>& comp,
                                               std::size_t from, std::size_t to) {
    std::vector<std::size_t> prev(g.edges.size(), SIZE_MAX);
    std::deque<std::size_t> queue{from};
    std::vector<bool> seen(g.edges.size(), false);
    seen[from] = true;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (const auto& [w, negative] : g.edges[v]) {
            if (comp[w] != comp[from] || seen[w]) continue;
            seen[w] = true;
            prev[w] = v;
            queue.push_back(w);
        }
    }
    std::vector<std::size_t> path;
    for (std::size_t v = to; v != SIZE_MAX; v = prev[v]) {
        path.push_back(v);
        if (v == from) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

std::size_t Stratification::n_strata() const {
    if (level.empty()) return 0;
    return *std::max_element(level.begin(), level.end()) + 1;
}

Stratification stratify(const GroundProgram& p) {
    const PredGraph g = predicate_graph(p);
    const std::vector<std::size_t> comp = strongly_connected_components(g);

    // A negative edge inside a strongly connected component witnesses a cycle
    // through negation. Scan rules in program order so the reported cycle is
    // deterministic.
    for (const GroundRule& r : p.rules) {
        const std::size_t hp = p.atom_pred[r.head];
        for (AtomId a : r.naf) {
            const std::size_t bp = p.atom_pred[a];
            if (comp[hp] != comp[bp]) continue;
            std::string cycle = p.predicates[hp].name;
            for (std::size_t v : path_within_component(g, comp, bp, hp)) {
                cycle += " -> " + p.predicates[v].name;
            }
            throw NotStratifiedError("program is not stratified: cycle " + cycle, cycle);
        }
    }

    // Minimal levels: relax the level inequalities to a fixpoint. Stratified
    // programs converge within one round per predicate.
    Stratification s;
    s.level.assign(p.predicates.size(), 0);
    for (std::size_t round = 0; round <= p.predicates.size() + 1; ++round) {
        bool changed = false;
        for (const GroundRule& r : p.rules) {
            const std::size_t hp = p.atom_pred[r.head];
            for (AtomId a : r.pos) {
                const std::size_t need = s.level[p.atom_pred[a]];
                if (s.level[hp] < need) {
                    s.level[hp] = need;
                    changed = true;
                }
            }
            for (AtomId a : r.naf) {
                const std::size_t need = s.level[p.atom_pred[a]] + 1;
                if (s.level[hp] < need) {
                    s.level[hp] = need;
                    changed = true;
                }
            }
        }
        if (!changed) return s;
    }
    throw Error("stratification levels failed to converge within their bound");
}

Interpretation perfect_model(const GroundProgram& p) {
    const Stratification s = stratify(p);
    std::vector<bool> holds(p.n_atoms(), false);
    for (std::size_t stratum = 0; stratum < s.n_strata(); ++stratum) {
        bool changed = true;
        for (std::size_t iter = 0; changed; ++iter) {
            if (iter > p.n_atoms() + 1) {
                throw Error("stratum iteration failed to converge within its bound");
            }
            changed = false;
            for (const GroundRule& r : p.rules) {
                if (s.level[p.atom_pred[r.head]] != stratum || holds[r.head]) continue;
                const bool fires =
                    std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return holds[a]; }) &&
                    std::none_of(r.naf.begin(), r.naf.end(), [&](AtomId a) { return holds[a]; });
                if (fires) {
                    holds[r.head] = true;
                    changed = true;
                }
            }
        }
    }
    std::vector<AtomId> atoms;
    for (std::size_t a = 0; a < p.n_atoms(); ++a) {
        if (holds[a]) atoms.push_back(static_cast<AtomId>(a));
    }
    return Interpretation(p.n_atoms(), std::move(atoms));
}

} // namespace lpsem
