// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit 0 only when
// every criterion holds. Criteria 1-5 read the shipped corpus programs,
// 6-7 sweep seeded random programs, 8 drives the installed CLI binary.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "lpsem/comparator.hpp"
#include "lpsem/completion.hpp"
#include "lpsem/embeddings.hpp"
#include "lpsem/fixpoints.hpp"
#include "lpsem/render.hpp"
#include "lpsem/syntax.hpp"

#include "support/oracles.hpp"
#include "support/random_programs.hpp"

using namespace lpsem;

namespace {

std::string corpus_dir() {
    const char* dir = std::getenv("LPSEM_CORPUS");
    return dir == nullptr ? std::string() : std::string(dir);
}

GroundProgram load(const std::string& name, std::string& detail) {
    const std::string dir = corpus_dir();
    if (dir.empty()) {
        detail = "LPSEM_CORPUS is not set";
        throw Error("missing corpus directory");
    }
    std::ifstream file(dir + "/" + name);
    if (!file) {
        detail = "cannot open " + dir + "/" + name;
        throw Error("missing corpus file");
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return ground(parse_program(buf.str()));
}

std::string set_text(const GroundProgram& gp, const Interpretation& m) {
    return interpretation_text(gp, m);
}

const RelationCheck* find_relation(const ReadingsReport& r, const std::string& id) {
    for (const RelationCheck& c : r.relations) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

bool flags_contain(const GroundProgram& gp, const ReadingsReport& r, const std::string& name,
                   PossibleState ps, Belief b) {
    for (const auto& [atom, status] : r.flags) {
        if (gp.atom_name(atom) == name) {
            return status.possible_state == ps && status.belief == b;
        }
    }
    return false;
}

// --------------------------------------------------------------------------
// Criteria 1-5: the corpus programs
// --------------------------------------------------------------------------

bool criterion1(std::string& detail) {
    const GroundProgram gp = load("p1.lp", detail);
    const auto supported = supported_models(gp);
    const auto stable = stable_models(gp);
    if (supported.size() != 1 || set_text(gp, supported[0]) != "{p}") {
        detail = "supported models: " + models_text(gp, supported);
        return false;
    }
    if (stable != supported) {
        detail = "stable models: " + models_text(gp, stable);
        return false;
    }
    const PartialInterpretation wf = well_founded_model(gp);
    if (partial_text(gp, wf) != "true: {p} false: {q} undefined: {}") {
        detail = "well-founded: " + partial_text(gp, wf);
        return false;
    }
    return true;
}

bool criterion2(std::string& detail) {
    const GroundProgram gp = load("p1.lp", detail);
    const auto es = ael_expansions(gelfond_embedding(gp));
    if (es.size() != 1) {
        detail = "expected one expansion, found " + std::to_string(es.size());
        return false;
    }
    if (atom_set_text(gp, es[0].believed_atoms) != "{p}") {
        detail = "believed " + atom_set_text(gp, es[0].believed_atoms);
        return false;
    }
    const auto& worlds = es[0].worlds.worlds;
    if (worlds.size() != 2 || set_text(gp, worlds[0]) != "{p}" ||
        set_text(gp, worlds[1]) != "{p, q}") {
        detail = "worlds:\n" + models_text(gp, worlds);
        return false;
    }
    const ReadingsReport r = diagnose(gp);
    const RelationCheck* check = find_relation(r, "worlds-superset");
    if (check == nullptr || check->status != RelationStatus::Ok ||
        check->detail.find("proper superset") == std::string::npos) {
        detail = check == nullptr ? "worlds-superset relation missing"
                                  : "worlds-superset: " + check->detail;
        return false;
    }
    return true;
}

bool criterion3(std::string& detail) {
    const GroundProgram gp = load("trans.lp", detail);
    const Interpretation least = least_model(gp);
    if (set_text(gp, least) != "{p(a,a), p(b,c), tr(a,a), tr(b,c)}") {
        detail = "least model: " + set_text(gp, least);
        return false;
    }
    const auto stable = stable_models(gp);
    if (stable.size() != 1 || stable[0] != least) {
        detail = "stable models: " + models_text(gp, stable);
        return false;
    }
    const auto es = ael_expansions(gelfond_embedding(gp));
    if (es.size() != 1 || es[0].believed_atoms != least.atoms()) {
        detail = es.empty() ? "no expansion"
                            : "believed " + atom_set_text(gp, es[0].believed_atoms);
        return false;
    }
    const ReadingsReport r = diagnose(gp);
    if (!flags_contain(gp, r, "p(a,b)", PossibleState::FalseInAll, Belief::Unknown) ||
        !flags_contain(gp, r, "tr(a,b)", PossibleState::FalseInAll, Belief::Unknown)) {
        detail = "flags do not include p(a,b) and tr(a,b) as false-in-all / unknown";
        return false;
    }
    return true;
}

bool criterion4(std::string& detail) {
    const GroundProgram gp = load("deadalive.lp", detail);
    const auto stable = stable_models(gp);
    if (stable.size() != 2) {
        detail = "stable models: " + models_text(gp, stable);
        return false;
    }
    std::vector<std::string> projected;
    for (const Interpretation& m : stable) {
        std::vector<AtomId> keep;
        for (AtomId a : m.atoms()) {
            const std::string& n = gp.atom_name(a);
            if (n == "dead" || n == "alive") keep.push_back(a);
        }
        projected.push_back(atom_set_text(gp, keep));
    }
    std::sort(projected.begin(), projected.end());
    if (projected != std::vector<std::string>{"{alive}", "{dead}"}) {
        detail = "projected models: " + projected[0] + " " + projected[1];
        return false;
    }
    const PartialInterpretation wf = well_founded_model(gp);
    if (!wf.true_atoms().empty() || !wf.false_atoms().empty() ||
        wf.undefined_atoms().size() != 3) {
        detail = "well-founded: " + partial_text(gp, wf);
        return false;
    }
    const ReadingsReport r = diagnose(gp);
    if (r.stratification.has_value() || r.negative_cycle.empty()) {
        detail = "program was not reported as non-stratified";
        return false;
    }
    return true;
}

bool criterion5(std::string& detail) {
    const GroundProgram gp = load("mixed.lp", detail);
    const auto supported = supported_models(gp);
    const auto stable = stable_models(gp);
    if (supported.size() != 1 || set_text(gp, supported[0]) != "{unhappy}" ||
        stable != supported) {
        detail = "supported: " + models_text(gp, supported) +
                 "stable: " + models_text(gp, stable);
        return false;
    }
    const Interpretation perfect = perfect_model(gp);
    if (perfect != supported[0]) {
        detail = "perfect model: " + set_text(gp, perfect);
        return false;
    }
    const PartialInterpretation wf = well_founded_model(gp);
    if (!wf.is_total() || atom_set_text(gp, wf.true_atoms()) != "{unhappy}") {
        detail = "well-founded: " + partial_text(gp, wf);
        return false;
    }
    const ReadingsReport r = diagnose(gp);
    if (r.flags.size() != 2 ||
        !flags_contain(gp, r, "happy", PossibleState::FalseInAll, Belief::Unknown) ||
        !flags_contain(gp, r, "wife_faithful", PossibleState::FalseInAll, Belief::Unknown)) {
        detail = "flags are not exactly {happy, wife_faithful}";
        return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// Criteria 6-7: seeded random-program sweeps
// --------------------------------------------------------------------------

std::vector<std::vector<AtomId>> atom_sets(const std::vector<Interpretation>& ms) {
    std::vector<std::vector<AtomId>> out;
    out.reserve(ms.size());
    for (const Interpretation& m : ms) out.push_back(m.atoms());
    return out;
}

struct SweepResult {
    bool relations_ok = true;   // criterion 6 (a)(b)(d)(e)(f)
    bool oracle_ok = true;      // criterion 7
    std::size_t checked = 0;
    std::string relations_detail;
    std::string oracle_detail;
};

SweepResult sweep_relations() {
    SweepResult result;
    std::mt19937 rng(20260816);
    for (int i = 0; i < 600; ++i) {
        const std::string text =
            lpsem::testing::random_program_text(rng, {6, 10, 3});
        const GroundProgram gp = ground(parse_program(text));
        const auto stable = stable_models(gp);
        ++result.checked;

        const auto note = [&](const std::string& msg, bool& ok, std::string& detail) {
            if (ok) detail = msg + " in:\n" + text;
            ok = false;
        };

        // (a) every stable model satisfies the completion
        const auto equivalences = clark_completion(gp).equivalences();
        for (const Interpretation& m : stable) {
            for (const FormulaPtr& f : equivalences) {
                if (!eval_formula(f, m)) {
                    note("stable model violates the completion", result.relations_ok,
                         result.relations_detail);
                }
            }
        }

        // (b) well-founded bounds
        const PartialInterpretation wf = well_founded_model(gp);
        for (const Interpretation& m : stable) {
            for (AtomId a : wf.true_atoms()) {
                if (!m.contains(a)) {
                    note("wf true atom outside a stable model", result.relations_ok,
                         result.relations_detail);
                }
            }
            for (AtomId a : wf.false_atoms()) {
                if (m.contains(a)) {
                    note("wf false atom inside a stable model", result.relations_ok,
                         result.relations_detail);
                }
            }
        }

        // (d) believed sets of the expansions are the stable models
        std::vector<std::vector<AtomId>> believed;
        for (const Expansion& e : ael_expansions(gelfond_embedding(gp))) {
            believed.push_back(e.believed_atoms);
        }
        if (believed != atom_sets(stable)) {
            note("expansion believed sets differ from the stable models",
                 result.relations_ok, result.relations_detail);
        }

        // (e) extension atom sets are the stable models
        std::vector<std::vector<AtomId>> extensions;
        for (const Extension& e : dl_extensions(mt_embedding(gp))) {
            extensions.push_back(e.atoms);
        }
        if (extensions != atom_sets(stable)) {
            note("extension atom sets differ from the stable models", result.relations_ok,
                 result.relations_detail);
        }

        // (f) stratified instances have one stable model = perfect = total wf
        try {
            stratify(gp);
            const Interpretation perfect = perfect_model(gp);
            if (stable.size() != 1 || stable[0] != perfect || !wf.is_total() ||
                wf.true_atoms() != perfect.atoms()) {
                note("stratified program disagrees across perfect/stable/wf",
                     result.relations_ok, result.relations_detail);
            }
        } catch (const NotStratifiedError&) {
        }

        // Criterion 7: brute-force all-subsets oracle
        if (stable != lpsem::testing::oracle_stable(gp)) {
            if (result.oracle_ok) result.oracle_detail = "oracle mismatch in:\n" + text;
            result.oracle_ok = false;
        }
    }
    return result;
}

bool sweep_partial_stable(std::string& detail) {
    std::mt19937 rng(3141);
    for (int i = 0; i < 500; ++i) {
        const std::string text = lpsem::testing::random_program_text(rng, {5, 8, 3});
        const GroundProgram gp = ground(parse_program(text));
        const auto psms = partial_stable_models(gp);
        const auto stable = stable_models(gp);

        // total partial stable models = stable models
        std::vector<std::vector<AtomId>> totals;
        for (const PartialInterpretation& m : psms) {
            if (m.is_total()) totals.push_back(m.true_atoms());
        }
        if (totals != atom_sets(stable)) {
            detail = "total partial stable models differ from stable models in:\n" + text;
            return false;
        }

        // wf = knowledge-least partial stable model
        const PartialInterpretation wf = well_founded_model(gp);
        if (std::find(psms.begin(), psms.end(), wf) == psms.end()) {
            detail = "wf model is not partial stable in:\n" + text;
            return false;
        }
        for (const PartialInterpretation& m : psms) {
            if (!wf.knowledge_leq(m)) {
                detail = "wf model is not knowledge-least in:\n" + text;
                return false;
            }
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// Criterion 8: CLI determinism on the corpus
// --------------------------------------------------------------------------

bool run_command(const std::string& cmd, std::string& output) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return false;
    output.clear();
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

bool criterion8(std::string& detail) {
    const char* cli = std::getenv("LPSEM_CLI");
    const std::string dir = corpus_dir();
    if (cli == nullptr || dir.empty()) {
        detail = "LPSEM_CLI or LPSEM_CORPUS is not set";
        return false;
    }
    for (const char* name : {"p1.lp", "trans.lp", "deadalive.lp", "mixed.lp"}) {
        const std::string cmd = std::string("\"") + cli + "\" diagnose --format json \"" + dir +
                                "/" + name + "\"";
        std::string first, second;
        if (!run_command(cmd, first) || !run_command(cmd, second)) {
            detail = std::string("command failed: ") + cmd;
            return false;
        }
        if (first.empty() || first != second) {
            detail = std::string("outputs differ for ") + name;
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    bool all_ok = true;
    int id = 0;
    const auto report = [&](const std::string& label,
                            const std::function<bool(std::string&)>& body) {
        ++id;
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            if (detail.empty()) detail = e.what();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ": " << label << '\n';
        if (!ok && !detail.empty()) std::cout << "       " << detail << '\n';
        all_ok = all_ok && ok;
    };

    const SweepResult sweep = sweep_relations();

    report("one-rule program: supported = stable = {p}, well-founded splits p and q",
           criterion1);
    report("one-rule program: single expansion with worlds a proper superset", criterion2);
    report("transitive closure: least = stable = believed; unreachable edges flagged",
           criterion3);
    report("choice program: two stable models, total ignorance, not stratified", criterion4);
    report("mixed program: one model under every semantics, two flagged atoms", criterion5);
    report("relation suite over " + std::to_string(sweep.checked) + " random programs",
           [&](std::string& detail) {
               detail = sweep.relations_detail;
               bool psm_ok = sweep.relations_ok && sweep_partial_stable(detail);
               return psm_ok;
           });
    report("stable models match the all-subsets oracle on the same programs",
           [&](std::string& detail) {
               detail = sweep.oracle_detail;
               return sweep.oracle_ok;
           });
    report("diagnose --format json is byte-identical across runs on the corpus", criterion8);

    return all_ok ? 0 : 1;
}
