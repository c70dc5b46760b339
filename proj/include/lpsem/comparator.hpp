// Cross-comparison of the two declarative readings of a program: the
// possible-state reading (classical models of the completion) against the
// belief-set reading (stable expansions of the embedded theory), with
// per-atom status, relation checks, and divergence flags.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpsem/completion.hpp"
#include "lpsem/embeddings.hpp"
#include "lpsem/fixpoints.hpp"
#include "lpsem/prop.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// Where an atom stands across all stable models — the canonical models of
// the possible-state reading. NoModels marks the degenerate case of a
// program without stable models, where the three ordinary statuses would be
// vacuous.
enum class PossibleState : std::uint8_t { TrueInAll, FalseInAll, Varies, NoModels };

// What the first (or a chosen) expansion says about an atom: true in every
// world, false in every world, or neither. NoExpansion marks programs whose
// embedding has no stable expansion.
enum class Belief : std::uint8_t { Believed, Disbelieved, Unknown, NoExpansion };

struct AtomStatus {
    PossibleState possible_state = PossibleState::NoModels;
    Belief belief = Belief::NoExpansion;

    bool operator==(const AtomStatus&) const = default;
};

enum class RelationStatus : std::uint8_t { Ok, Violated, Skipped };

struct RelationCheck {
    std::string id;          // short stable identifier, e.g. "stable-subset-completion"
    std::string description; // what was checked
    RelationStatus status = RelationStatus::Skipped;
    std::string detail;      // outcome specifics, deterministic

    bool operator==(const RelationCheck&) const = default;
};

// Enumeration budgets threaded through every computation in a report.
struct Caps {
    std::size_t enumeration = kDefaultEnumerationCap;  // 2-valued model search
    std::size_t three_valued = kDefaultThreeValuedCap; // 3^n partial-stable search
    std::size_t guesses = kDefaultGuessCap;            // expansion/extension guessing
};

struct ReadingsReport {
    std::vector<Interpretation> completion_models;
    std::vector<Interpretation> stable_models;
    PartialInterpretation wf_model;
    // Present only when the base fits the three-valued cap.
    std::optional<std::vector<PartialInterpretation>> partial_stable;
    std::vector<Expansion> expansions;
    std::vector<Extension> extensions;
    // Exactly one of these is set: the level map, or a cycle through negation.
    std::optional<Stratification> stratification;
    std::string negative_cycle;
    std::optional<Interpretation> perfect;
    std::vector<RelationCheck> relations;
    // Indexed by atom id; possible_state over the stable models, belief
    // taken from the first expansion.
    std::vector<AtomStatus> statuses;
    // Atoms whose classical status is decided (true-in-all or false-in-all)
    // while some expansion leaves them unknown; union over all expansions,
    // sorted by atom id.
    std::vector<std::pair<AtomId, AtomStatus>> flags;
    std::vector<std::string> notes;
};

// Per-atom status, indexed by atom id: possible_state over the stable
// models, belief from the first (lexicographically least believed-set)
// expansion of the embedded theory. The completion based checks live in the
// relations of diagnose; statuses compare the program's canonical models
// against the believer's view, which is what makes atoms like an unreachable
// closure edge show up as settled-yet-unknown.
std::vector<AtomStatus> atom_statuses(const GroundProgram& p, const Caps& caps = {});

// The full report. Checked relations: (R1) every stable model satisfies the
// completion — a violation is an implementation bug and aborts via
// std::logic_error; (R2) for single-expansion programs, the worlds contain
// every completion model, reported as equal or proper superset; (R3) the
// well-founded true/false sets bound every stable model.
ReadingsReport diagnose(const GroundProgram& p, const Caps& caps = {});

} // namespace lpsem
