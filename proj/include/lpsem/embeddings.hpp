// The belief-set reading: an autoepistemic embedding of ground programs with
// stable expansions and possible-world models, and a default-logic embedding
// with Reiter extensions.
#pragma once

#include <cstddef>
#include <vector>

#include "lpsem/prop.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

inline constexpr std::size_t kDefaultGuessCap = 20;

// ---------------------------------------------------------------------------
// Autoepistemic side
// ---------------------------------------------------------------------------

// One embedded formula b1 & ... & bm & ~K c1 & ... & ~K cn -> head. The
// belief operator occurs only as ~K applied to an atom; a fact is a bare
// atom (both atom lists empty).
struct AelFormula {
    std::vector<AtomId> body;          // objective conjuncts, in rule order
    std::vector<AtomId> not_believed;  // atoms under ~K, in rule order
    AtomId head = 0;

    bool operator==(const AelFormula&) const = default;
};

struct AelTheory {
    std::vector<AelFormula> formulas;
    std::size_t vocab = 0;

    bool operator==(const AelTheory&) const = default;
};

// A possible world model: the set of states the believer considers possible.
struct PossibleWorldModel {
    std::vector<Interpretation> worlds; // enumeration order

    bool operator==(const PossibleWorldModel&) const = default;
};

// A stable expansion, identified by what is believed. believed_atoms is the
// set of atoms true in every world; the worlds are exactly the classical
// models of the objective kernel over the theory vocabulary.
struct Expansion {
    std::vector<AtomId> believed_atoms; // sorted
    PossibleWorldModel worlds;
    std::vector<FormulaPtr> objective_kernel;
};

// Each rule a <- b1,...,bm, not c1,...,not cn becomes the formula
// b1 & ... & bm & ~K c1 & ... & ~K cn -> a; facts become bare atoms.
AelTheory gelfond_embedding(const GroundProgram& p);

// All stable expansions, ordered by believed-atom set. Guesses range over
// the distinct atoms under K; a guess is kept when, with each ~K c replaced
// by its guessed value, the resulting objective kernel entails exactly the
// guessed-believed K-atoms. Throws CapError when the number of distinct
// K-atoms exceeds `max_k_atoms`; world enumeration obeys `max_atoms`.
std::vector<Expansion> ael_expansions(const AelTheory& t,
                                      std::size_t max_k_atoms = kDefaultGuessCap,
                                      std::size_t max_atoms = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Default-logic side
// ---------------------------------------------------------------------------

// The default (prereq1 & ... & prereqm : ~just1, ..., ~justn / consequent).
// Justifications are stored as the atoms being negated.
struct DefaultRule {
    std::vector<AtomId> prerequisite;   // in rule order
    std::vector<AtomId> justifications; // in rule order
    AtomId consequent = 0;

    bool operator==(const DefaultRule&) const = default;
};

struct DefaultTheory {
    std::vector<DefaultRule> defaults;
    std::vector<AtomId> facts; // always empty under this embedding
    std::size_t vocab = 0;

    bool operator==(const DefaultTheory&) const = default;
};

// An extension, represented by its atomic part; the deductive closure adds
// nothing in this fragment.
struct Extension {
    std::vector<AtomId> atoms; // sorted

    bool operator==(const Extension&) const = default;
};

// Rule a <- b1,...,bm, not c1,...,not cn becomes the default
// (b1 & ... & bm : ~c1, ..., ~cn / a).
DefaultTheory mt_embedding(const GroundProgram& p);

// All extensions, ordered by atom set: every E that equals the closure of
// the consequents of the defaults applicable with respect to E, where the
// closure grows from the empty set and E is consulted only for the
// justification checks. Guesses range over the distinct justification
// atoms; throws CapError when they exceed `max_guess_atoms`.
std::vector<Extension> dl_extensions(const DefaultTheory& t,
                                     std::size_t max_guess_atoms = kDefaultGuessCap);

} // namespace lpsem
