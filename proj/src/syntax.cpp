#include "lpsem/syntax.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lpsem {

bool Atom::is_ground() const {
    return std::none_of(args.begin(), args.end(),
                        [](const std::string& a) { return is_variable_name(a); });
}

std::string Atom::str() const {
    if (args.empty()) return predicate;
    std::string out = predicate;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += args[i];
    }
    out += ')';
    return out;
}

std::string Literal::str() const {
    return sign == Sign::Naf ? "not " + atom.str() : atom.str();
}

std::string Rule::str() const {
    std::string out = head.str();
    if (!body.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (i) out += ", ";
            out += body[i].str();
        }
    }
    out += '.';
    return out;
}

std::string Predicate::str() const {
    return arity == 0 ? name : name + "/" + std::to_string(arity);
}

std::optional<AtomId> GroundProgram::atom_id(std::string_view name) const {
    auto it = std::lower_bound(base.begin(), base.end(), name);
    if (it == base.end() || *it != name) return std::nullopt;
    return static_cast<AtomId>(it - base.begin());
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, Variable, If, Dot, Comma, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Variable: return "variable";
        case Tok::If: return "':-'";
        case Tok::Dot: return "'.'";
        case Tok::Comma: return "','";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "?";
}

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool ident_tail(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_tail(text_[pos_])) step();
            while (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '\'')) step();
            std::string word(text_.substr(start, pos_ - start));
            tok_.kind = is_variable_name(word) ? Tok::Variable : Tok::Ident;
            tok_.text = std::move(word);
            return;
        }
        switch (c) {
            case '.': step(); tok_ = {Tok::Dot, ".", tok_.line, tok_.column}; return;
            case ',': step(); tok_ = {Tok::Comma, ",", tok_.line, tok_.column}; return;
            case '(': step(); tok_ = {Tok::LParen, "(", tok_.line, tok_.column}; return;
            case ')': step(); tok_ = {Tok::RParen, ")", tok_.line, tok_.column}; return;
            case ':':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                    step(); step();
                    tok_ = {Tok::If, ":-", tok_.line, tok_.column};
                    return;
                }
                throw ParseError("expected ':-'", line_, col_);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                step();
            } else {
                break;
            }
        }
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Program parse() {
        Program p;
        while (lex_.peek().kind != Tok::End) {
            int line = lex_.peek().line;
            Rule r = parse_rule();
            check_safety(r, line);
            p.rules.push_back(std::move(r));
        }
        std::set<std::string> consts;
        for (const Rule& r : p.rules) {
            collect_constants(r.head, consts);
            for (const Literal& l : r.body) collect_constants(l.atom, consts);
        }
        p.constants.assign(consts.begin(), consts.end());
        return p;
    }

private:
    Rule parse_rule() {
        Rule r;
        r.head = parse_atom("rule head");
        if (lex_.peek().kind == Tok::If) {
            lex_.take();
            r.body.push_back(parse_literal());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                r.body.push_back(parse_literal());
            }
        }
        expect(Tok::Dot);
        return r;
    }

    Literal parse_literal() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Ident && t.text == "not") {
            lex_.take();
            return {Sign::Naf, parse_atom("negated atom")};
        }
        return {Sign::Positive, parse_atom("body literal")};
    }

    Atom parse_atom(const char* what) {
        const Token t = lex_.peek();
        if (t.kind != Tok::Ident) {
            throw ParseError(std::string("expected ") + what + " (" + tok_name(Tok::Ident) +
                                 "), found " + found(t),
                             t.line, t.column);
        }
        if (t.text == "not") {
            throw ParseError("'not' is reserved and cannot name an atom", t.line, t.column);
        }
        lex_.take();
        Atom a;
        a.predicate = t.text;
        if (lex_.peek().kind == Tok::LParen) {
            lex_.take();
            a.args.push_back(parse_term());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                a.args.push_back(parse_term());
            }
            expect(Tok::RParen);
        }
        return a;
    }

    std::string parse_term() {
        const Token t = lex_.peek();
        if (t.kind != Tok::Ident && t.kind != Tok::Variable) {
            throw ParseError("expected term (constant or variable), found " + found(t), t.line,
                             t.column);
        }
        if (t.text == "not") {
            throw ParseError("'not' is reserved and cannot name a constant", t.line, t.column);
        }
        lex_.take();
        return t.text;
    }

    void expect(Tok kind) {
        const Token t = lex_.peek();
        if (t.kind != kind) {
            throw ParseError(std::string("expected ") + tok_name(kind) + ", found " + found(t),
                             t.line, t.column);
        }
        lex_.take();
    }

    static std::string found(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

    static void check_safety(const Rule& r, int line) {
        std::set<std::string> safe;
        for (const Literal& l : r.body) {
            if (l.sign != Sign::Positive) continue;
            for (const std::string& a : l.atom.args) {
                if (is_variable_name(a)) safe.insert(a);
            }
        }
        auto check_atom = [&](const Atom& a, const char* where) {
            for (const std::string& arg : a.args) {
                if (is_variable_name(arg) && !safe.count(arg)) {
                    throw SafetyError("unsafe variable " + arg + " in " + where + " of rule '" +
                                          r.str() + "' (line " + std::to_string(line) +
                                          "): it does not occur in a positive body literal",
                                      arg);
                }
            }
        };
        check_atom(r.head, "head");
        for (const Literal& l : r.body) {
            if (l.sign == Sign::Naf) check_atom(l.atom, "naf literal");
        }
    }

    static void collect_constants(const Atom& a, std::set<std::string>& out) {
        for (const std::string& arg : a.args) {
            if (!is_variable_name(arg)) out.insert(arg);
        }
    }

    Lexer lex_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

std::string to_text(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules) {
        out += r.str();
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------

namespace {

// All predicates of the program, sorted.
std::vector<Predicate> collect_predicates(const Program& p) {
    std::set<Predicate> preds;
    for (const Rule& r : p.rules) {
        preds.insert({r.head.predicate, static_cast<std::uint32_t>(r.head.args.size())});
        for (const Literal& l : r.body) {
            preds.insert({l.atom.predicate, static_cast<std::uint32_t>(l.atom.args.size())});
        }
    }
    return {preds.begin(), preds.end()};
}

Atom substitute(const Atom& a, const std::map<std::string, std::string>& sub) {
    Atom out;
    out.predicate = a.predicate;
    out.args.reserve(a.args.size());
    for (const std::string& arg : a.args) {
        auto it = sub.find(arg);
        out.args.push_back(it == sub.end() ? arg : it->second);
    }
    return out;
}

// Upper bound on rule instantiations; bases stay desk scale, this guards
// against rules whose variable count makes |constants|^k explode.
constexpr std::size_t kMaxRuleInstances = std::size_t{1} << 22;

}  // namespace

GroundProgram ground(const Program& p, std::size_t max_atoms) {
    GroundProgram gp;
    gp.predicates = collect_predicates(p);
    const std::vector<std::string>& consts = p.constants;

    // Herbrand base: every predicate applied to every constant tuple.
    std::size_t base_size = 0;
    for (const Predicate& pred : gp.predicates) {
        if (pred.arity > 0 && consts.empty()) {
            throw GroundingError("cannot ground program: predicate " + pred.str() +
                                 " takes arguments but the program mentions no constants");
        }
        std::size_t count = 1;
        for (std::uint32_t i = 0; i < pred.arity; ++i) {
            count *= consts.size();
            if (count > max_atoms) break;
        }
        base_size += count;
        if (base_size > max_atoms) {
            throw CapError("Herbrand base exceeds the atom budget of " +
                           std::to_string(max_atoms));
        }
    }

    for (std::size_t pi = 0; pi < gp.predicates.size(); ++pi) {
        const Predicate& pred = gp.predicates[pi];
        std::vector<std::uint32_t> odo(pred.arity, 0);
        while (true) {
            Atom a;
            a.predicate = pred.name;
            for (std::uint32_t v : odo) a.args.push_back(consts[v]);
            gp.base.push_back(a.str());
            std::uint32_t k = pred.arity;
            while (k > 0 && ++odo[k - 1] == consts.size()) odo[--k] = 0;
            if (k == 0) break;
        }
    }
    // Sort by printed name; atom id = rank in this order.
    {
        std::vector<std::string> sorted = gp.base;
        std::sort(sorted.begin(), sorted.end());
        gp.base = std::move(sorted);
    }
    gp.atom_pred.resize(gp.base.size());
    for (std::size_t i = 0; i < gp.base.size(); ++i) {
        // recover the predicate of each (sorted) atom from its printed form
        std::string_view name = gp.base[i];
        auto paren = name.find('(');
        std::string pname(paren == std::string_view::npos ? name : name.substr(0, paren));
        std::uint32_t arity = 0;
        if (paren != std::string_view::npos) {
            arity = 1;
            for (char c : name.substr(paren)) arity += (c == ',');
        }
        auto it = std::lower_bound(gp.predicates.begin(), gp.predicates.end(),
                                   Predicate{pname, arity});
        gp.atom_pred[i] = static_cast<std::uint32_t>(it - gp.predicates.begin());
    }

    auto intern = [&gp](const Atom& a) -> AtomId {
        auto id = gp.atom_id(a.str());
        return *id;   // every ground atom of the program is in the base
    };

    std::set<GroundRule> seen;
    for (const Rule& r : p.rules) {
        // distinct variables in order of first occurrence
        std::vector<std::string> vars;
        auto note_vars = [&vars](const Atom& a) {
            for (const std::string& arg : a.args) {
                if (is_variable_name(arg) &&
                    std::find(vars.begin(), vars.end(), arg) == vars.end()) {
                    vars.push_back(arg);
                }
            }
        };
        note_vars(r.head);
        for (const Literal& l : r.body) note_vars(l.atom);

        std::size_t n_instances = 1;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            n_instances *= consts.size();
            if (n_instances > kMaxRuleInstances) {
                throw CapError("rule '" + r.str() + "' has too many ground instances");
            }
        }

        std::vector<std::uint32_t> odo(vars.size(), 0);
        while (true) {
            std::map<std::string, std::string> sub;
            for (std::size_t i = 0; i < vars.size(); ++i) sub[vars[i]] = consts[odo[i]];
            GroundRule g;
            g.head = intern(substitute(r.head, sub));
            for (const Literal& l : r.body) {
                AtomId a = intern(substitute(l.atom, sub));
                (l.sign == Sign::Positive ? g.pos : g.naf).push_back(a);
            }
            if (seen.insert(g).second) gp.rules.push_back(std::move(g));
            std::size_t k = vars.size();
            while (k > 0 && ++odo[k - 1] == consts.size()) odo[--k] = 0;
            if (k == 0) break;
        }
    }
    return gp;
}

Program to_program(const GroundProgram& gp) {
    auto atom_of = [&gp](AtomId id) {
        // printed ground atoms parse back to themselves
        const std::string& name = gp.atom_name(id);
        Atom a;
        auto paren = name.find('(');
        if (paren == std::string::npos) {
            a.predicate = name;
            return a;
        }
        a.predicate = name.substr(0, paren);
        std::string arg;
        for (std::size_t i = paren + 1; i + 1 < name.size(); ++i) {
            if (name[i] == ',') {
                a.args.push_back(arg);
                arg.clear();
            } else {
                arg += name[i];
            }
        }
        a.args.push_back(arg);
        return a;
    };

    Program p;
    std::set<std::string> consts;
    for (const GroundRule& g : gp.rules) {
        Rule r;
        r.head = atom_of(g.head);
        for (AtomId a : g.pos) r.body.push_back({Sign::Positive, atom_of(a)});
        for (AtomId a : g.naf) r.body.push_back({Sign::Naf, atom_of(a)});
        p.rules.push_back(std::move(r));
    }
    for (AtomId a = 0; a < gp.n_atoms(); ++a) {
        for (const std::string& arg : atom_of(a).args) consts.insert(arg);
    }
    p.constants.assign(consts.begin(), consts.end());
    return p;
}

}  // namespace lpsem
