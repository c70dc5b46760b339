#include "lpsem/render.hpp"

namespace lpsem {

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

std::string atom_set_text(const GroundProgram& p, const std::vector<AtomId>& atoms) {
    std::string out = "{";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0) out += ", ";
        out += p.atom_name(atoms[i]);
    }
    out += '}';
    return out;
}

std::string interpretation_text(const GroundProgram& p, const Interpretation& m) {
    return atom_set_text(p, m.atoms());
}

std::string partial_text(const GroundProgram& p, const PartialInterpretation& m) {
    return "true: " + atom_set_text(p, m.true_atoms()) +
           " false: " + atom_set_text(p, m.false_atoms()) +
           " undefined: " + atom_set_text(p, m.undefined_atoms());
}

std::string models_text(const GroundProgram& p, const std::vector<Interpretation>& models) {
    std::string out;
    for (const Interpretation& m : models) {
        out += interpretation_text(p, m);
        out += '\n';
    }
    return out;
}

std::string partials_text(const GroundProgram& p, const std::vector<PartialInterpretation>& ms) {
    std::string out;
    for (const PartialInterpretation& m : ms) {
        out += partial_text(p, m);
        out += '\n';
    }
    return out;
}

std::string ael_formula_text(const GroundProgram& p, const AelFormula& f) {
    if (f.body.empty() && f.not_believed.empty()) return p.atom_name(f.head);
    std::string out = p.atom_name(f.head) + " <- ";
    bool first = true;
    for (AtomId a : f.body) {
        if (!first) out += " & ";
        out += p.atom_name(a);
        first = false;
    }
    for (AtomId a : f.not_believed) {
        if (!first) out += " & ";
        out += "~K " + p.atom_name(a);
        first = false;
    }
    return out;
}

std::string ael_theory_text(const GroundProgram& p, const AelTheory& t) {
    std::string out;
    for (const AelFormula& f : t.formulas) {
        out += ael_formula_text(p, f);
        out += '\n';
    }
    return out;
}

std::string default_rule_text(const GroundProgram& p, const DefaultRule& d) {
    std::string out;
    for (std::size_t i = 0; i < d.prerequisite.size(); ++i) {
        if (i > 0) out += " & ";
        out += p.atom_name(d.prerequisite[i]);
    }
    if (!d.prerequisite.empty()) out += ' ';
    out += ": ";
    for (std::size_t i = 0; i < d.justifications.size(); ++i) {
        if (i > 0) out += ", ";
        out += '~' + p.atom_name(d.justifications[i]);
    }
    if (!d.justifications.empty()) out += ' ';
    out += "/ " + p.atom_name(d.consequent);
    return out;
}

std::string default_theory_text(const GroundProgram& p, const DefaultTheory& t) {
    std::string out;
    for (const DefaultRule& d : t.defaults) {
        out += default_rule_text(p, d);
        out += '\n';
    }
    return out;
}

std::string expansions_text(const GroundProgram& p, const std::vector<Expansion>& es) {
    std::string out;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Expansion& e = es[i];
        out += "expansion " + std::to_string(i + 1) + ": believed " +
               atom_set_text(p, e.believed_atoms) + "\n";
        out += "  worlds (" + std::to_string(e.worlds.worlds.size()) + "):\n";
        for (const Interpretation& w : e.worlds.worlds) {
            out += "    " + interpretation_text(p, w) + "\n";
        }
    }
    return out;
}

std::string extensions_text(const GroundProgram& p, const std::vector<Extension>& es) {
    std::string out;
    for (const Extension& e : es) {
        out += atom_set_text(p, e.atoms);
        out += '\n';
    }
    return out;
}

std::string possible_state_name(PossibleState s) {
    switch (s) {
        case PossibleState::TrueInAll: return "true-in-all";
        case PossibleState::FalseInAll: return "false-in-all";
        case PossibleState::Varies: return "varies";
        case PossibleState::NoModels: return "no-models";
    }
    return "no-models";
}

std::string belief_name(Belief b) {
    switch (b) {
        case Belief::Believed: return "believed";
        case Belief::Disbelieved: return "disbelieved";
        case Belief::Unknown: return "unknown";
        case Belief::NoExpansion: return "no-expansion";
    }
    return "no-expansion";
}

std::string relation_status_name(RelationStatus s) {
    switch (s) {
        case RelationStatus::Ok: return "ok";
        case RelationStatus::Violated: return "violated";
        case RelationStatus::Skipped: return "skipped";
    }
    return "skipped";
}

std::string relations_text(const std::vector<RelationCheck>& checks) {
    std::string out;
    for (const RelationCheck& c : checks) {
        out += "  [" + relation_status_name(c.status) + "] " + c.id + ": " + c.description +
               " (" + c.detail + ")\n";
    }
    return out;
}

std::string report_text(const GroundProgram& p, const ReadingsReport& r) {
    std::string out;
    out += "atoms (" + std::to_string(p.n_atoms()) + "): ";
    for (std::size_t a = 0; a < p.n_atoms(); ++a) {
        if (a > 0) out += ", ";
        out += p.base[a];
    }
    out += '\n';

    out += "completion models (" + std::to_string(r.completion_models.size()) + "):\n";
    for (const Interpretation& m : r.completion_models) {
        out += "  " + interpretation_text(p, m) + "\n";
    }
    out += "stable models (" + std::to_string(r.stable_models.size()) + "):\n";
    for (const Interpretation& m : r.stable_models) {
        out += "  " + interpretation_text(p, m) + "\n";
    }
    out += "well-founded: " + partial_text(p, r.wf_model) + "\n";
    if (r.partial_stable) {
        out += "partial stable models (" + std::to_string(r.partial_stable->size()) + "):\n";
        for (const PartialInterpretation& m : *r.partial_stable) {
            out += "  " + partial_text(p, m) + "\n";
        }
    }
    out += "expansions (" + std::to_string(r.expansions.size()) + "):\n";
    for (const Expansion& e : r.expansions) {
        out += "  believed " + atom_set_text(p, e.believed_atoms) + "; worlds: " +
               std::to_string(e.worlds.worlds.size()) + "\n";
    }
    out += "extensions (" + std::to_string(r.extensions.size()) + "):\n";
    for (const Extension& e : r.extensions) {
        out += "  " + atom_set_text(p, e.atoms) + "\n";
    }
    if (r.stratification) {
        out += "stratification: ";
        for (std::size_t i = 0; i < p.predicates.size(); ++i) {
            if (i > 0) out += ", ";
            out += p.predicates[i].str() + ": " + std::to_string(r.stratification->level[i]);
        }
        out += '\n';
        if (r.perfect) out += "perfect model: " + interpretation_text(p, *r.perfect) + "\n";
    } else {
        out += "not stratified: cycle " + r.negative_cycle + "\n";
    }
    out += "relations:\n" + relations_text(r.relations);
    out += "statuses:\n";
    for (std::size_t a = 0; a < r.statuses.size(); ++a) {
        out += "  " + p.base[a] + ": " + possible_state_name(r.statuses[a].possible_state) +
               " / " + belief_name(r.statuses[a].belief) + "\n";
    }
    if (r.flags.empty()) {
        out += "flags: none\n";
    } else {
        out += "flags (" + std::to_string(r.flags.size()) + "):\n";
        for (const auto& [atom, status] : r.flags) {
            out += "  " + p.atom_name(atom) + ": " + possible_state_name(status.possible_state) +
                   " / " + belief_name(status.belief) + "\n";
        }
    }
    if (!r.notes.empty()) {
        out += "notes:\n";
        for (const std::string& n : r.notes) out += "  - " + n + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

Json atom_array(const GroundProgram& p, const std::vector<AtomId>& atoms) {
    Json arr = Json::array();
    for (AtomId a : atoms) arr.push_back(p.atom_name(a));
    return arr;
}

} // namespace

Json interpretation_json(const GroundProgram& p, const Interpretation& m) {
    return atom_array(p, m.atoms());
}

Json partial_json(const GroundProgram& p, const PartialInterpretation& m) {
    Json j;
    j["true"] = atom_array(p, m.true_atoms());
    j["false"] = atom_array(p, m.false_atoms());
    j["undefined"] = atom_array(p, m.undefined_atoms());
    return j;
}

Json models_json(const GroundProgram& p, const std::string& semantics,
                 const std::vector<Interpretation>& models) {
    Json j;
    j["semantics"] = semantics;
    Json arr = Json::array();
    for (const Interpretation& m : models) arr.push_back(interpretation_json(p, m));
    j["models"] = std::move(arr);
    return j;
}

Json partial_model_json(const GroundProgram& p, const std::string& semantics,
                        const PartialInterpretation& m) {
    Json j;
    j["semantics"] = semantics;
    j["true"] = atom_array(p, m.true_atoms());
    j["false"] = atom_array(p, m.false_atoms());
    j["undefined"] = atom_array(p, m.undefined_atoms());
    return j;
}

Json partials_json(const GroundProgram& p, const std::string& semantics,
                   const std::vector<PartialInterpretation>& ms) {
    Json j;
    j["semantics"] = semantics;
    Json arr = Json::array();
    for (const PartialInterpretation& m : ms) arr.push_back(partial_json(p, m));
    j["models"] = std::move(arr);
    return j;
}

Json ael_theory_json(const GroundProgram& p, const AelTheory& t) {
    Json j;
    j["target"] = "ael";
    Json arr = Json::array();
    for (const AelFormula& f : t.formulas) {
        Json jf;
        jf["body"] = atom_array(p, f.body);
        jf["not_believed"] = atom_array(p, f.not_believed);
        jf["head"] = p.atom_name(f.head);
        arr.push_back(std::move(jf));
    }
    j["formulas"] = std::move(arr);
    return j;
}

Json default_theory_json(const GroundProgram& p, const DefaultTheory& t) {
    Json j;
    j["target"] = "dl";
    Json arr = Json::array();
    for (const DefaultRule& d : t.defaults) {
        Json jd;
        jd["prerequisite"] = atom_array(p, d.prerequisite);
        jd["justifications"] = atom_array(p, d.justifications);
        jd["consequent"] = p.atom_name(d.consequent);
        arr.push_back(std::move(jd));
    }
    j["defaults"] = std::move(arr);
    j["facts"] = atom_array(p, t.facts);
    return j;
}

Json expansions_json(const GroundProgram& p, const std::vector<Expansion>& es) {
    Json j;
    Json arr = Json::array();
    for (const Expansion& e : es) {
        Json je;
        je["believed"] = atom_array(p, e.believed_atoms);
        Json worlds = Json::array();
        for (const Interpretation& w : e.worlds.worlds) {
            worlds.push_back(interpretation_json(p, w));
        }
        je["worlds"] = std::move(worlds);
        arr.push_back(std::move(je));
    }
    j["expansions"] = std::move(arr);
    return j;
}

Json extensions_json(const GroundProgram& p, const std::vector<Extension>& es) {
    Json j;
    Json arr = Json::array();
    for (const Extension& e : es) arr.push_back(atom_array(p, e.atoms));
    j["extensions"] = std::move(arr);
    return j;
}

Json relations_json(const std::vector<RelationCheck>& checks) {
    Json arr = Json::array();
    for (const RelationCheck& c : checks) {
        Json jc;
        jc["id"] = c.id;
        jc["description"] = c.description;
        jc["status"] = relation_status_name(c.status);
        jc["detail"] = c.detail;
        arr.push_back(std::move(jc));
    }
    return arr;
}

Json report_json(const GroundProgram& p, const ReadingsReport& r) {
    Json j;
    j["atoms"] = p.base;
    Json completion = Json::array();
    for (const Interpretation& m : r.completion_models) {
        completion.push_back(interpretation_json(p, m));
    }
    j["completion_models"] = std::move(completion);
    Json stable = Json::array();
    for (const Interpretation& m : r.stable_models) stable.push_back(interpretation_json(p, m));
    j["stable_models"] = std::move(stable);
    j["wf"] = partial_json(p, r.wf_model);
    if (r.partial_stable) {
        Json ps = Json::array();
        for (const PartialInterpretation& m : *r.partial_stable) ps.push_back(partial_json(p, m));
        j["partial_stable"] = std::move(ps);
    } else {
        j["partial_stable"] = nullptr;
    }
    Json expansions = Json::array();
    for (const Expansion& e : r.expansions) {
        Json je;
        je["believed"] = atom_array(p, e.believed_atoms);
        je["world_count"] = e.worlds.worlds.size();
        expansions.push_back(std::move(je));
    }
    j["expansions"] = std::move(expansions);
    Json extensions = Json::array();
    for (const Extension& e : r.extensions) extensions.push_back(atom_array(p, e.atoms));
    j["extensions"] = std::move(extensions);
    if (r.stratification) {
        Json strata = Json::object();
        for (std::size_t i = 0; i < p.predicates.size(); ++i) {
            strata[p.predicates[i].str()] = r.stratification->level[i];
        }
        j["stratification"] = std::move(strata);
        j["negative_cycle"] = nullptr;
    } else {
        j["stratification"] = nullptr;
        j["negative_cycle"] = r.negative_cycle;
    }
    if (r.perfect) {
        j["perfect"] = interpretation_json(p, *r.perfect);
    } else {
        j["perfect"] = nullptr;
    }
    j["relations"] = relations_json(r.relations);
    Json statuses = Json::object();
    for (std::size_t a = 0; a < r.statuses.size(); ++a) {
        Json js;
        js["possible_state"] = possible_state_name(r.statuses[a].possible_state);
        js["belief"] = belief_name(r.statuses[a].belief);
        statuses[p.base[a]] = std::move(js);
    }
    j["statuses"] = std::move(statuses);
    Json flags = Json::array();
    for (const auto& [atom, status] : r.flags) {
        Json jf;
        jf["atom"] = p.atom_name(atom);
        jf["possible_state"] = possible_state_name(status.possible_state);
        jf["belief"] = belief_name(status.belief);
        flags.push_back(std::move(jf));
    }
    j["flags"] = std::move(flags);
    j["notes"] = r.notes;
    return j;
}

} // namespace lpsem
