// Deterministic text and JSON rendering for every structure the workbench
// produces. Text conventions: atom sets print as "{a, b}" with atoms in name
// order; model lists print one model per line; partial interpretations print
// as three labeled sets.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lpsem/comparator.hpp"
#include "lpsem/embeddings.hpp"
#include "lpsem/fixpoints.hpp"
#include "lpsem/prop.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// Insertion-ordered JSON keeps every serialization byte-stable.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

std::string atom_set_text(const GroundProgram& p, const std::vector<AtomId>& atoms);
std::string interpretation_text(const GroundProgram& p, const Interpretation& m);
std::string partial_text(const GroundProgram& p, const PartialInterpretation& m);

// One model per line; a trailing newline after each line.
std::string models_text(const GroundProgram& p, const std::vector<Interpretation>& models);
std::string partials_text(const GroundProgram& p, const std::vector<PartialInterpretation>& ms);

std::string ael_formula_text(const GroundProgram& p, const AelFormula& f);
std::string ael_theory_text(const GroundProgram& p, const AelTheory& t);
std::string default_rule_text(const GroundProgram& p, const DefaultRule& d);
std::string default_theory_text(const GroundProgram& p, const DefaultTheory& t);

std::string expansions_text(const GroundProgram& p, const std::vector<Expansion>& es);
std::string extensions_text(const GroundProgram& p, const std::vector<Extension>& es);
std::string relations_text(const std::vector<RelationCheck>& checks);
std::string report_text(const GroundProgram& p, const ReadingsReport& r);

std::string possible_state_name(PossibleState s);
std::string belief_name(Belief b);
std::string relation_status_name(RelationStatus s);

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

Json interpretation_json(const GroundProgram& p, const Interpretation& m);
Json partial_json(const GroundProgram& p, const PartialInterpretation& m);

// {"semantics": <name>, "models": [[atom, ...], ...]}
Json models_json(const GroundProgram& p, const std::string& semantics,
                 const std::vector<Interpretation>& models);
// {"semantics": <name>, "true": [...], "false": [...], "undefined": [...]}
Json partial_model_json(const GroundProgram& p, const std::string& semantics,
                        const PartialInterpretation& m);
// Like partial_model_json per element, under "models".
Json partials_json(const GroundProgram& p, const std::string& semantics,
                   const std::vector<PartialInterpretation>& ms);

Json ael_theory_json(const GroundProgram& p, const AelTheory& t);
Json default_theory_json(const GroundProgram& p, const DefaultTheory& t);

// Full worlds included: this backs the dedicated expansions listing.
Json expansions_json(const GroundProgram& p, const std::vector<Expansion>& es);
Json extensions_json(const GroundProgram& p, const std::vector<Extension>& es);
Json relations_json(const std::vector<RelationCheck>& checks);

// The whole report. Expansions appear as believed atoms plus a world count;
// the world lists are available through the expansions rendering instead.
Json report_json(const GroundProgram& p, const ReadingsReport& r);

} // namespace lpsem
