// Propositional formulas over an interned ground vocabulary, two- and
// three-valued evaluation, and bounded model enumeration.
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lpsem/errors.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

enum class Connective : std::uint8_t {
    Atom,
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula node. And/Or are n-ary (children may be empty: an empty
// conjunction is true, an empty disjunction is false). Implies/Iff are
// binary; Not is unary; Atom carries the atom id.
struct Formula {
    Connective kind = Connective::True;
    AtomId atom = 0;                  // valid when kind == Atom
    std::vector<FormulaPtr> children; // operands for Not/And/Or/Implies/Iff
};

FormulaPtr make_atom(AtomId a);
FormulaPtr make_true();
FormulaPtr make_false();
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_and(std::vector<FormulaPtr> fs);
FormulaPtr make_or(std::vector<FormulaPtr> fs);
FormulaPtr make_implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_iff(FormulaPtr lhs, FormulaPtr rhs);

// Renders with ~, &, |, ->, <-> and atom names taken from `gp`. Parenthesises
// enough to be unambiguous without drowning simple formulas in brackets.
std::string formula_text(const FormulaPtr& f, const GroundProgram& gp);

// ---------------------------------------------------------------------------
// Interpretations
// ---------------------------------------------------------------------------

// A total two-valued interpretation over atoms 0..vocab-1, stored as the
// sorted set of true atoms. Ordering compares the sorted id vectors
// lexicographically, which (ids being ranks of sorted printed names) is the
// order {} < {a} < {a,b} < {a,c} < {b} for vocabulary {a,b,c}.
class Interpretation {
public:
    Interpretation() = default;
    Interpretation(std::size_t vocab, std::vector<AtomId> true_atoms);

    std::size_t vocab() const { return vocab_; }
    const std::vector<AtomId>& atoms() const { return atoms_; }
    bool contains(AtomId a) const;

    bool operator==(const Interpretation&) const = default;
    auto operator<=>(const Interpretation&) const = default;

private:
    std::size_t vocab_ = 0;
    std::vector<AtomId> atoms_; // sorted, unique, all < vocab_
};

// ---------------------------------------------------------------------------
// Truth values
// ---------------------------------------------------------------------------

// Strong Kleene truth ordering: False < Unknown < True.
enum class Truth : std::uint8_t { False, Unknown, True };

Truth kleene_not(Truth t);
Truth kleene_and(Truth a, Truth b);
Truth kleene_or(Truth a, Truth b);

// Two-valued evaluation; throws Error if the formula mentions an atom
// outside the interpretation's vocabulary.
bool eval_formula(const FormulaPtr& f, const Interpretation& m);

// Three-valued (strong Kleene) evaluation against a vector of truth values
// indexed by atom id. Implies/Iff are evaluated via ~a | b and the
// conjunction of both implications.
Truth eval_formula3(const FormulaPtr& f, const std::vector<Truth>& vals);

// ---------------------------------------------------------------------------
// Model enumeration
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultEnumerationCap = 22;

// All models of the conjunction of `theory` over atoms 0..vocab-1, in the
// Interpretation order documented above. Throws CapError if vocab exceeds
// `max_atoms`. The search assigns atoms in id order and prunes any branch
// under which some theory member already evaluates to false three-valuedly.
std::vector<Interpretation> enumerate_models(const std::vector<FormulaPtr>& theory,
                                             std::size_t vocab,
                                             std::size_t max_atoms = kDefaultEnumerationCap);

// True iff the conjunction of `theory` has at least one model.
bool satisfiable(const std::vector<FormulaPtr>& theory, std::size_t vocab,
                 std::size_t max_atoms = kDefaultEnumerationCap);

// True iff every model of `theory` satisfies `f`.
bool entails(const std::vector<FormulaPtr>& theory, const FormulaPtr& f, std::size_t vocab,
             std::size_t max_atoms = kDefaultEnumerationCap);

} // namespace lpsem
