#pragma once

// Program syntax: AST, parser, pretty printer and grounder.
//
// Grammar (one rule per statement, '%' starts a line comment):
//
//   rule    := atom ( ":-" body )? "."
//   body    := literal ( "," literal )*
//   literal := "not" atom | atom
//   atom    := ident ( "(" term ( "," term )* ")" )?
//   term    := ident | variable
//
// Identifiers start with a lowercase letter, variables with an uppercase
// one; both continue with letters, digits and underscores and may end in a
// run of '*' or '\'' (alive*, p' are valid constants and predicates).
// "not" is reserved for negation as failure. Terms are constants and
// variables only; there are no function symbols, so the Herbrand base of a
// program is always finite.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpsem/errors.hpp"

namespace lpsem {

using AtomId = std::uint32_t;

inline bool is_variable_name(std::string_view s) {
    return !s.empty() && s.front() >= 'A' && s.front() <= 'Z';
}

struct Atom {
    std::string predicate;
    std::vector<std::string> args;   // constants or variables, told apart by case

    bool is_ground() const;
    std::string str() const;   // printed form, e.g. "tr(a,b)"
    bool operator==(const Atom&) const = default;
};

enum class Sign { Positive, Naf };

struct Literal {
    Sign sign = Sign::Positive;
    Atom atom;

    std::string str() const;   // "q" or "not q"
    bool operator==(const Literal&) const = default;
};

struct Rule {
    Atom head;
    std::vector<Literal> body;   // empty body = fact

    bool is_fact() const { return body.empty(); }
    std::string str() const;   // "h :- b1, not b2." or "h."
    bool operator==(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;
    std::vector<std::string> constants;   // sorted, unique

    bool operator==(const Program&) const = default;
};

// Parses program text. Throws ParseError on bad syntax (with line/column)
// and SafetyError when a head or naf variable has no positive body
// occurrence. Rule order is preserved.
Program parse_program(std::string_view text);

// One rule per line; parsing the result again yields the same Program.
std::string to_text(const Program& p);

// A predicate symbol. p and p(a) are distinct predicates (p/0 vs p/1).
struct Predicate {
    std::string name;
    std::uint32_t arity = 0;

    std::string str() const;   // "p" for arity 0, "p/2" otherwise
    auto operator<=>(const Predicate&) const = default;
};

struct GroundRule {
    AtomId head = 0;
    std::vector<AtomId> pos;   // positive body atoms, in rule order
    std::vector<AtomId> naf;   // negated body atoms, in rule order

    auto operator<=>(const GroundRule&) const = default;
};

// A variable-free program over an interned Herbrand base. Atom ids index
// `base`, which is sorted by printed name, so id order is the lexicographic
// order used by every model listing.
struct GroundProgram {
    std::vector<std::string> base;          // printed atom names, sorted
    std::vector<std::uint32_t> atom_pred;   // atom id -> index into predicates
    std::vector<Predicate> predicates;      // sorted
    std::vector<GroundRule> rules;

    AtomId n_atoms() const { return static_cast<AtomId>(base.size()); }
    const std::string& atom_name(AtomId a) const { return base.at(a); }
    std::optional<AtomId> atom_id(std::string_view name) const;
    bool operator==(const GroundProgram&) const = default;
};

inline constexpr std::size_t kDefaultGroundAtomCap = 100000;

// Instantiates every rule with all constant substitutions and enumerates the
// Herbrand base: every atom constructible from the program's predicates and
// constants, not only those mentioned in rules, so that atoms with an empty
// definition still exist in the vocabulary. For a propositional program the
// base is exactly the atoms mentioned. Identical ground instances are kept
// once. Throws CapError when the base would exceed `max_atoms` and
// GroundingError when predicates take arguments but there are no constants.
GroundProgram ground(const Program& p, std::size_t max_atoms = kDefaultGroundAtomCap);

// The ground program re-read as a Program. Grounding it again is the
// identity.
Program to_program(const GroundProgram& gp);

}  // namespace lpsem
