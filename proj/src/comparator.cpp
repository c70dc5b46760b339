#include "lpsem/comparator.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpsem/render.hpp"

namespace lpsem {

namespace {

PossibleState possible_state_of(AtomId a, const std::vector<Interpretation>& models) {
    if (models.empty()) return PossibleState::NoModels;
    bool in_all = true, in_none = true;
    for (const Interpretation& m : models) {
        (m.contains(a) ? in_none : in_all) = false;
    }
    if (in_all) return PossibleState::TrueInAll;
    if (in_none) return PossibleState::FalseInAll;
    return PossibleState::Varies;
}

Belief belief_of(AtomId a, const Expansion& e) {
    if (std::binary_search(e.believed_atoms.begin(), e.believed_atoms.end(), a)) {
        return Belief::Believed;
    }
    const auto& worlds = e.worlds.worlds;
    if (std::none_of(worlds.begin(), worlds.end(),
                     [&](const Interpretation& w) { return w.contains(a); })) {
        return Belief::Disbelieved;
    }
    return Belief::Unknown;
}

std::vector<AtomStatus> statuses_from(const GroundProgram& p,
                                      const std::vector<Interpretation>& stable,
                                      const std::vector<Expansion>& expansions) {
    std::vector<AtomStatus> out(p.n_atoms());
    for (std::size_t a = 0; a < p.n_atoms(); ++a) {
        const AtomId id = static_cast<AtomId>(a);
        out[a].possible_state = possible_state_of(id, stable);
        out[a].belief = expansions.empty() ? Belief::NoExpansion : belief_of(id, expansions.front());
    }
    return out;
}

} // namespace

std::vector<AtomStatus> atom_statuses(const GroundProgram& p, const Caps& caps) {
    const auto models = stable_models(p, caps.enumeration);
    const auto expansions = ael_expansions(gelfond_embedding(p), caps.guesses, caps.enumeration);
    return statuses_from(p, models, expansions);
}

ReadingsReport diagnose(const GroundProgram& p, const Caps& caps) {
    ReadingsReport r;
    r.completion_models = supported_models(p, caps.enumeration);
    r.stable_models = stable_models(p, caps.enumeration);
    r.wf_model = well_founded_model(p);
    if (p.n_atoms() <= caps.three_valued) {
        r.partial_stable = partial_stable_models(p, caps.three_valued);
    } else {
        r.notes.push_back("partial stable models omitted: " + std::to_string(p.n_atoms()) +
                          " atoms exceed the three-valued cap of " +
                          std::to_string(caps.three_valued));
    }
    r.expansions = ael_expansions(gelfond_embedding(p), caps.guesses, caps.enumeration);
    r.extensions = dl_extensions(mt_embedding(p), caps.guesses);
    try {
        r.stratification = stratify(p);
        r.perfect = perfect_model(p);
    } catch (const NotStratifiedError& e) {
        r.negative_cycle = e.cycle;
    }

    // R1: every stable model satisfies the completion. This holds for every
    // program, so a violation means the solver itself is broken.
    {
        const auto equivalences = clark_completion(p).equivalences();
        for (const Interpretation& m : r.stable_models) {
            for (const FormulaPtr& f : equivalences) {
                if (!eval_formula(f, m)) {
                    throw std::logic_error("stable model " + interpretation_text(p, m) +
                                           " violates the completion: internal error");
                }
            }
        }
        r.relations.push_back({"stable-subset-completion",
                               "every stable model satisfies the completion",
                               RelationStatus::Ok,
                               std::to_string(r.stable_models.size()) +
                                   " stable model(s) checked against " +
                                   std::to_string(equivalences.size()) + " equivalence(s)"});
    }

    // R2: for single-expansion programs, the worlds contain every completion
    // model; report containment as equality or proper superset.
    {
        RelationCheck check{"worlds-superset",
                            "the single expansion's worlds contain every completion model",
                            RelationStatus::Skipped, ""};
        if (r.expansions.size() == 1) {
            const auto& worlds = r.expansions.front().worlds.worlds;
            const bool contained =
                std::includes(worlds.begin(), worlds.end(), r.completion_models.begin(),
                              r.completion_models.end());
            if (!contained) {
                check.status = RelationStatus::Violated;
                for (const Interpretation& m : r.completion_models) {
                    if (!std::binary_search(worlds.begin(), worlds.end(), m)) {
                        check.detail = "completion model " + interpretation_text(p, m) +
                                       " is not a world";
                        break;
                    }
                }
            } else if (worlds.size() == r.completion_models.size()) {
                check.status = RelationStatus::Ok;
                check.detail = "worlds equal the completion models (" +
                               std::to_string(worlds.size()) + ")";
            } else {
                check.status = RelationStatus::Ok;
                check.detail = "worlds (" + std::to_string(worlds.size()) +
                               ") are a proper superset of the completion models (" +
                               std::to_string(r.completion_models.size()) + ")";
            }
        } else {
            check.detail = "requires exactly one expansion, found " +
                           std::to_string(r.expansions.size());
        }
        r.relations.push_back(std::move(check));
    }

    // R3: the well-founded true/false sets bound every stable model.
    {
        RelationCheck check{"wf-bounds-stable",
                            "well-founded true atoms lie in, and false atoms outside, "
                            "every stable model",
                            RelationStatus::Ok, ""};
        const auto wf_true = r.wf_model.true_atoms();
        const auto wf_false = r.wf_model.false_atoms();
        for (const Interpretation& m : r.stable_models) {
            const bool lower = std::all_of(wf_true.begin(), wf_true.end(),
                                           [&](AtomId a) { return m.contains(a); });
            const bool upper = std::none_of(wf_false.begin(), wf_false.end(),
                                            [&](AtomId a) { return m.contains(a); });
            if (!lower || !upper) {
                check.status = RelationStatus::Violated;
                check.detail = "stable model " + interpretation_text(p, m) +
                               " escapes the well-founded bounds";
                break;
            }
        }
        if (check.status == RelationStatus::Ok) {
            check.detail = "bounds hold for all " + std::to_string(r.stable_models.size()) +
                           " stable model(s)";
        }
        r.relations.push_back(std::move(check));
    }

    r.statuses = statuses_from(p, r.stable_models, r.expansions);

    // Flags: classically settled atoms some expansion leaves unknown.
    std::vector<bool> flagged(p.n_atoms(), false);
    for (const Expansion& e : r.expansions) {
        for (std::size_t a = 0; a < p.n_atoms(); ++a) {
            const PossibleState ps = r.statuses[a].possible_state;
            if (ps != PossibleState::TrueInAll && ps != PossibleState::FalseInAll) continue;
            if (belief_of(static_cast<AtomId>(a), e) == Belief::Unknown) flagged[a] = true;
        }
    }
    for (std::size_t a = 0; a < p.n_atoms(); ++a) {
        if (flagged[a]) {
            r.flags.emplace_back(static_cast<AtomId>(a),
                                 AtomStatus{r.statuses[a].possible_state, Belief::Unknown});
        }
    }

    if (r.stable_models.empty()) {
        r.notes.push_back("the program has no stable model; possible-state statuses are "
                          "markers only");
    }
    if (r.expansions.empty()) {
        r.notes.push_back("the embedded theory has no stable expansion; belief statuses are "
                          "markers only");
    }
    if (!r.flags.empty()) {
        r.notes.push_back("flagged atoms are settled in every stable model yet stay unknown "
                          "to the believer; atoms inferred from them remain believed under the "
                          "formal reading, though an intuitive epistemic reading might withhold "
                          "judgement on them too");
    }
    return r;
}

} // namespace lpsem
