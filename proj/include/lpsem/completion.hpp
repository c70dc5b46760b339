// Predicate completion of a ground program and the supported-model semantics.
#pragma once

#include <vector>

#include "lpsem/prop.hpp"
#include "lpsem/syntax.hpp"

namespace lpsem {

// The completion of a ground program: one equivalence per atom of the
// vocabulary. For atom a with rule bodies B1..Bk the definition is
// a <-> B1 | ... | Bk, where each Bi is the conjunction of its positive
// atoms and negated naf atoms; an atom with no rules gets a <-> false.
class CompletionTheory {
public:
    CompletionTheory(std::size_t vocab, std::vector<FormulaPtr> definitions);

    std::size_t vocab() const { return vocab_; }

    // definitions()[a] is the right-hand side of atom a's equivalence.
    const std::vector<FormulaPtr>& definitions() const { return definitions_; }

    // The full equivalences a <-> definitions()[a], one per atom.
    std::vector<FormulaPtr> equivalences() const;

private:
    std::size_t vocab_ = 0;
    std::vector<FormulaPtr> definitions_;
};

// Builds the completion. Bodies are kept in program order. Degenerate cases
// collapse instead of nesting: a single-formula disjunction is that formula,
// an empty body is true, an empty disjunction is false — so a fact yields
// a <-> true and an undefined atom yields a <-> false.
CompletionTheory clark_completion(const GroundProgram& gp);

// Models of the completion, in enumeration order.
std::vector<Interpretation> supported_models(const GroundProgram& gp,
                                             std::size_t max_atoms = kDefaultEnumerationCap);

} // namespace lpsem
