// Fixpoint-style semantics for ground normal programs: immediate consequence
// and least model, Gelfond-Lifschitz reduct and stable models, the Fitting
// (three-valued supported) model, the well-founded model via the alternating
// fixpoint, partial stable models by exhaustive search, and stratification
// with the perfect model.
#pragma once

#include <cstddef>
#include <vector>

#include "lpsem/prop.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// ---------------------------------------------------------------------------
// Partial interpretations
// ---------------------------------------------------------------------------

// A three-valued interpretation over atoms 0..vocab-1. Atoms not in the true
// or false set are undefined. Ordering compares (true_atoms, false_atoms)
// lexicographically, which with name-ranked ids is an order on printed names.
class PartialInterpretation {
public:
    PartialInterpretation() = default;
    PartialInterpretation(std::size_t vocab, std::vector<AtomId> true_atoms,
                          std::vector<AtomId> false_atoms);
    explicit PartialInterpretation(std::vector<Truth> values);

    std::size_t vocab() const { return values_.size(); }
    Truth value(AtomId a) const;
    const std::vector<Truth>& values() const { return values_; }

    std::vector<AtomId> true_atoms() const;
    std::vector<AtomId> false_atoms() const;
    std::vector<AtomId> undefined_atoms() const;
    bool is_total() const;

    // Knowledge order: both the true and the false set grow.
    bool knowledge_leq(const PartialInterpretation& other) const;

    bool operator==(const PartialInterpretation&) const = default;
    bool operator<(const PartialInterpretation& other) const;

private:
    std::vector<Truth> values_;
};

// ---------------------------------------------------------------------------
// Two-valued fixpoints
// ---------------------------------------------------------------------------

// One application of the immediate-consequence operator: the heads of the
// rules whose positive body holds in `i` and whose naf atoms are outside `i`.
Interpretation tp_step(const GroundProgram& p, const Interpretation& i);

// Least fixpoint of tp_step from the empty interpretation. Requires a
// definite program; throws NotDefiniteError naming the first naf literal.
Interpretation least_model(const GroundProgram& p);

// Delete every rule with a naf literal whose atom is in m, strip the naf
// literals from the surviving rules. The result is definite; base, atom ids
// and rule order are preserved.
GroundProgram gl_reduct(const GroundProgram& p, const Interpretation& m);

// All m with m == least_model(gl_reduct(p, m)), in enumeration order.
// Computed by filtering the supported models, which are a superset.
std::vector<Interpretation> stable_models(const GroundProgram& p,
                                          std::size_t max_atoms = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Three-valued fixpoints
// ---------------------------------------------------------------------------

// Knowledge-least fixpoint of the three-valued one-step operator: an atom
// becomes true when some rule body is three-valued true, false when every
// body is three-valued false; atoms with no rules are false.
PartialInterpretation fitting_model(const GroundProgram& p);

// Alternating fixpoint. With S(X) = least_model(gl_reduct(p, X)), the true
// set T is the least fixpoint of X -> S(S(X)) and the false set is
// base minus S(T).
PartialInterpretation well_founded_model(const GroundProgram& p);

inline constexpr std::size_t kDefaultThreeValuedCap = 12;

// All M equal to the truth-least three-valued model of the reduct of p by M,
// where the reduct replaces each naf literal by the truth constant that
// complements its atom's value in M. Exhaustive 3^|base| search; throws
// CapError when the base exceeds `max_atoms`. Sorted by (true, false) sets.
std::vector<PartialInterpretation> partial_stable_models(
    const GroundProgram& p, std::size_t max_atoms = kDefaultThreeValuedCap);

// ---------------------------------------------------------------------------
// Stratification and the perfect model
// ---------------------------------------------------------------------------

// Minimal level assignment per predicate: across every rule the head's level
// is >= the level of each positive body predicate and > the level of each
// naf body predicate. level is indexed like GroundProgram::predicates.
struct Stratification {
    std::vector<std::size_t> level;

    std::size_t n_strata() const;
};

// Computes the minimal stratification or throws NotStratifiedError citing a
// cycle through a negative edge, e.g. "alive -> alive* -> alive".
Stratification stratify(const GroundProgram& p);

// Stratum-by-stratum least models, bottom level first, each relative to the
// atoms fixed by the lower strata. Throws NotStratifiedError when no
// stratification exists.
Interpretation perfect_model(const GroundProgram& p);

} // namespace lpsem
