#include "lpsem/completion.hpp"

#include <utility>

namespace lpsem {

CompletionTheory::CompletionTheory(std::size_t vocab, std::vector<FormulaPtr> definitions)
    : vocab_(vocab), definitions_(std::move(definitions)) {
    if (definitions_.size() != vocab_) throw Error("completion definition count mismatch");
}

std::vector<FormulaPtr> CompletionTheory::equivalences() const {
    std::vector<FormulaPtr> out;
    out.reserve(vocab_);
    for (std::size_t a = 0; a < vocab_; ++a) {
        out.push_back(make_iff(make_atom(static_cast<AtomId>(a)), definitions_[a]));
    }
    return out;
}

namespace {

FormulaPtr body_formula(const GroundRule& r) {
    std::vector<FormulaPtr> parts;
    parts.reserve(r.pos.size() + r.naf.size());
    for (AtomId a : r.pos) parts.push_back(make_atom(a));
    for (AtomId a : r.naf) parts.push_back(make_not(make_atom(a)));
    if (parts.empty()) return make_true();
    if (parts.size() == 1) return parts.front();
    return make_and(std::move(parts));
}

} // namespace

CompletionTheory clark_completion(const GroundProgram& gp) {
    std::vector<std::vector<FormulaPtr>> bodies(gp.n_atoms());
    for (const GroundRule& r : gp.rules) bodies[r.head].push_back(body_formula(r));

    std::vector<FormulaPtr> defs;
    defs.reserve(gp.n_atoms());
    for (auto& alt : bodies) {
        if (alt.empty()) {
            defs.push_back(make_false());
        } else if (alt.size() == 1) {
            defs.push_back(std::move(alt.front()));
        } else {
            defs.push_back(make_or(std::move(alt)));
        }
    }
    return CompletionTheory(gp.n_atoms(), std::move(defs));
}

std::vector<Interpretation> supported_models(const GroundProgram& gp, std::size_t max_atoms) {
    return enumerate_models(clark_completion(gp).equivalences(), gp.n_atoms(), max_atoms);
}

} // namespace lpsem
