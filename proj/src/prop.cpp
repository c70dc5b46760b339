#include "lpsem/prop.hpp"

#include <algorithm>
#include <utility>

namespace lpsem {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

FormulaPtr make_atom(AtomId a) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Atom;
    f->atom = a;
    return f;
}

FormulaPtr make_true() {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::True;
    return f;
}

FormulaPtr make_false() {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::False;
    return f;
}

FormulaPtr make_not(FormulaPtr g) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Not;
    f->children.push_back(std::move(g));
    return f;
}

FormulaPtr make_and(std::vector<FormulaPtr> fs) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::And;
    f->children = std::move(fs);
    return f;
}

FormulaPtr make_or(std::vector<FormulaPtr> fs) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Or;
    f->children = std::move(fs);
    return f;
}

FormulaPtr make_implies(FormulaPtr lhs, FormulaPtr rhs) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Implies;
    f->children.push_back(std::move(lhs));
    f->children.push_back(std::move(rhs));
    return f;
}

FormulaPtr make_iff(FormulaPtr lhs, FormulaPtr rhs) {
    auto f = std::make_shared<Formula>();
    f->kind = Connective::Iff;
    f->children.push_back(std::move(lhs));
    f->children.push_back(std::move(rhs));
    return f;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence, high binds tightest: atom/const 5, ~ 4, & 3, | 2, -> 1, <-> 0.
int precedence(Connective c) {
    switch (c) {
        case Connective::Atom:
        case Connective::True:
        case Connective::False: return 5;
        case Connective::Not: return 4;
        case Connective::And: return 3;
        case Connective::Or: return 2;
        case Connective::Implies: return 1;
        case Connective::Iff: return 0;
    }
    return 5;
}

void print(const FormulaPtr& f, const GroundProgram& gp, int parent_prec, std::string& out) {
    const int prec = precedence(f->kind);
    const bool wrap = prec < parent_prec;
    if (wrap) out += '(';
    switch (f->kind) {
        case Connective::Atom:
            out += gp.atom_name(f->atom);
            break;
        case Connective::True:
            out += "true";
            break;
        case Connective::False:
            out += "false";
            break;
        case Connective::Not:
            out += '~';
            print(f->children[0], gp, prec + 1, out);
            break;
        case Connective::And:
        case Connective::Or: {
            if (f->children.empty()) {
                out += f->kind == Connective::And ? "true" : "false";
                break;
            }
            const char* sep = f->kind == Connective::And ? " & " : " | ";
            for (std::size_t i = 0; i < f->children.size(); ++i) {
                if (i > 0) out += sep;
                print(f->children[i], gp, prec + 1, out);
            }
            break;
        }
        case Connective::Implies:
        case Connective::Iff: {
            print(f->children[0], gp, prec + 1, out);
            out += f->kind == Connective::Implies ? " -> " : " <-> ";
            print(f->children[1], gp, prec + 1, out);
            break;
        }
    }
    if (wrap) out += ')';
}

} // namespace

std::string formula_text(const FormulaPtr& f, const GroundProgram& gp) {
    std::string out;
    print(f, gp, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Interpretations
// ---------------------------------------------------------------------------

Interpretation::Interpretation(std::size_t vocab, std::vector<AtomId> true_atoms)
    : vocab_(vocab), atoms_(std::move(true_atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    for (AtomId a : atoms_) {
        if (a >= vocab_) throw Error("interpretation atom out of vocabulary");
    }
}

bool Interpretation::contains(AtomId a) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Truth kleene_not(Truth t) {
    switch (t) {
        case Truth::False: return Truth::True;
        case Truth::Unknown: return Truth::Unknown;
        case Truth::True: return Truth::False;
    }
    return Truth::Unknown;
}

Truth kleene_and(Truth a, Truth b) { return std::min(a, b); }
Truth kleene_or(Truth a, Truth b) { return std::max(a, b); }

bool eval_formula(const FormulaPtr& f, const Interpretation& m) {
    switch (f->kind) {
        case Connective::Atom:
            if (f->atom >= m.vocab()) throw Error("formula atom out of vocabulary");
            return m.contains(f->atom);
        case Connective::True: return true;
        case Connective::False: return false;
        case Connective::Not: return !eval_formula(f->children[0], m);
        case Connective::And:
            for (const auto& c : f->children) {
                if (!eval_formula(c, m)) return false;
            }
            return true;
        case Connective::Or:
            for (const auto& c : f->children) {
                if (eval_formula(c, m)) return true;
            }
            return false;
        case Connective::Implies:
            return !eval_formula(f->children[0], m) || eval_formula(f->children[1], m);
        case Connective::Iff:
            return eval_formula(f->children[0], m) == eval_formula(f->children[1], m);
    }
    return false;
}

Truth eval_formula3(const FormulaPtr& f, const std::vector<Truth>& vals) {
    switch (f->kind) {
        case Connective::Atom:
            if (f->atom >= vals.size()) throw Error("formula atom out of vocabulary");
            return vals[f->atom];
        case Connective::True: return Truth::True;
        case Connective::False: return Truth::False;
        case Connective::Not: return kleene_not(eval_formula3(f->children[0], vals));
        case Connective::And: {
            Truth t = Truth::True;
            for (const auto& c : f->children) t = kleene_and(t, eval_formula3(c, vals));
            return t;
        }
        case Connective::Or: {
            Truth t = Truth::False;
            for (const auto& c : f->children) t = kleene_or(t, eval_formula3(c, vals));
            return t;
        }
        case Connective::Implies:
            return kleene_or(kleene_not(eval_formula3(f->children[0], vals)),
                             eval_formula3(f->children[1], vals));
        case Connective::Iff: {
            const Truth a = eval_formula3(f->children[0], vals);
            const Truth b = eval_formula3(f->children[1], vals);
            return kleene_and(kleene_or(kleene_not(a), b), kleene_or(kleene_not(b), a));
        }
    }
    return Truth::Unknown;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

// Depth-first search over partial assignments. On entry to step(i), atoms
// below i are decided and atoms from i on are Unknown, so completing the
// prefix with "all remaining atoms false" is the least extension and every
// other extension adds true atoms after position i; emitting the all-false
// leaf before recursing on each j >= i in increasing order therefore yields
// models in increasing Interpretation order. A branch dies as soon as some
// theory member evaluates to false under the partial assignment.
struct Enumerator {
    const std::vector<FormulaPtr>& theory;
    std::size_t vocab;
    std::vector<Truth> vals;
    std::vector<AtomId> chosen;
    std::vector<Interpretation>* out = nullptr; // null => stop at first model
    bool found = false;

    bool pruned() const {
        for (const auto& f : theory) {
            if (eval_formula3(f, vals) == Truth::False) return true;
        }
        return false;
    }

    // Returns false to abort the whole search (first-model mode succeeded).
    bool step(std::size_t i) {
        if (pruned()) return true;
        // Leaf: everything from i on stays false.
        for (std::size_t j = i; j < vocab; ++j) vals[j] = Truth::False;
        bool holds = true;
        for (const auto& f : theory) {
            if (eval_formula3(f, vals) != Truth::True) {
                holds = false;
                break;
            }
        }
        for (std::size_t j = i; j < vocab; ++j) vals[j] = Truth::Unknown;
        if (holds) {
            found = true;
            if (!out) return false;
            out->emplace_back(vocab, chosen);
        }
        for (std::size_t j = i; j < vocab; ++j) {
            // Atoms in [i, j) are false in every extension of this child.
            vals[j] = Truth::True;
            chosen.push_back(static_cast<AtomId>(j));
            const bool keep_going = step(j + 1);
            chosen.pop_back();
            vals[j] = Truth::False;
            if (!keep_going) return false;
        }
        for (std::size_t j = i; j < vocab; ++j) vals[j] = Truth::Unknown;
        return true;
    }
};

} // namespace

std::vector<Interpretation> enumerate_models(const std::vector<FormulaPtr>& theory,
                                             std::size_t vocab, std::size_t max_atoms) {
    if (vocab > max_atoms) {
        throw CapError("model enumeration over " + std::to_string(vocab) +
                       " atoms exceeds the cap of " + std::to_string(max_atoms));
    }
    std::vector<Interpretation> out;
    Enumerator e{theory, vocab, std::vector<Truth>(vocab, Truth::Unknown), {}, &out};
    e.step(0);
    return out;
}

bool satisfiable(const std::vector<FormulaPtr>& theory, std::size_t vocab,
                 std::size_t max_atoms) {
    if (vocab > max_atoms) {
        throw CapError("model enumeration over " + std::to_string(vocab) +
                       " atoms exceeds the cap of " + std::to_string(max_atoms));
    }
    Enumerator e{theory, vocab, std::vector<Truth>(vocab, Truth::Unknown), {}, nullptr};
    e.step(0);
    return e.found;
}

bool entails(const std::vector<FormulaPtr>& theory, const FormulaPtr& f, std::size_t vocab,
             std::size_t max_atoms) {
    std::vector<FormulaPtr> augmented = theory;
    augmented.push_back(make_not(f));
    return !satisfiable(augmented, vocab, max_atoms);
}

} // namespace lpsem
