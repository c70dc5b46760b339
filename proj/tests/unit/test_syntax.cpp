#include <doctest.h>

#include "lpsem/errors.hpp"
#include "lpsem/syntax.hpp"

using namespace lpsem;

TEST_CASE("parses a single naf rule") {
    const Program p = parse_program("p :- not q.\n");
    REQUIRE(p.rules.size() == 1);
    const Rule& r = p.rules[0];
    CHECK(r.head.predicate == "p");
    CHECK(r.head.args.empty());
    REQUIRE(r.body.size() == 1);
    CHECK(r.body[0].sign == Sign::Naf);
    CHECK(r.body[0].atom.predicate == "q");
    CHECK(r.str() == "p :- not q.");
}

TEST_CASE("parses facts, comments, and multi-literal bodies") {
    const Program p = parse_program(
        "% a comment\n"
        "p(a,a).\n"
        "tr(X,Y) :- p(X,Z), tr(Z,Y). % trailing comment\n");
    REQUIRE(p.rules.size() == 2);
    CHECK(p.rules[0].is_fact());
    CHECK(p.rules[0].str() == "p(a,a).");
    CHECK(p.rules[1].str() == "tr(X,Y) :- p(X,Z), tr(Z,Y).");
    CHECK(p.constants == std::vector<std::string>{"a"});
}

TEST_CASE("starred and primed identifiers parse") {
    const Program p = parse_program("alive* :- not alive'.\n");
    CHECK(p.rules[0].head.predicate == "alive*");
    CHECK(p.rules[0].body[0].atom.predicate == "alive'");
}

TEST_CASE("parse errors carry position") {
    try {
        parse_program("p :- q\nr.\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_program("p : q."), ParseError);
    CHECK_THROWS_AS(parse_program("p :- not not q."), ParseError);
    CHECK_THROWS_AS(parse_program("p("), ParseError);
    CHECK_THROWS_AS(parse_program("not :- q."), ParseError);
}

TEST_CASE("unsafe variables are rejected by name") {
    try {
        parse_program("p(X) :- q(a).");
        FAIL("expected SafetyError");
    } catch (const SafetyError& e) {
        CHECK(e.variable == "X");
    }
    // A variable occurring only under naf is unsafe too.
    CHECK_THROWS_AS(parse_program("p(a) :- not q(Y)."), SafetyError);
    // Occurring in some positive literal makes it safe everywhere.
    CHECK_NOTHROW(parse_program("p(X) :- q(X), not r(X)."));
}

TEST_CASE("pretty printing round-trips") {
    const std::string text = "p(a,a).\np(b,c).\ntr(X,Y) :- p(X,Y).\ntr(X,Y) :- p(X,Z), tr(Z,Y).\n";
    const Program p = parse_program(text);
    CHECK(to_text(p) == text);
    CHECK(parse_program(to_text(p)) == p);
}

TEST_CASE("grounding the transitive-closure program") {
    const GroundProgram gp = ground(parse_program(
        "p(a,a). p(b,c). tr(X,Y) :- p(X,Y). tr(X,Y) :- p(X,Z), tr(Z,Y)."));
    // Base: every predicate/constant combination, sorted by printed name.
    CHECK(gp.n_atoms() == 18);
    CHECK(gp.base.front() == "p(a,a)");
    CHECK(gp.base.back() == "tr(c,c)");
    // 2 facts + 9 instances of the first tr rule + 27 of the second.
    CHECK(gp.rules.size() == 38);
    CHECK(gp.predicates.size() == 2);
    CHECK(gp.predicates[0].str() == "p/2");
    CHECK(gp.predicates[1].str() == "tr/2");
}

TEST_CASE("ground atom ids rank the sorted printed names") {
    const GroundProgram gp = ground(parse_program(
        "dead :- not alive. alive :- not alive*. alive* :- not alive."));
    REQUIRE(gp.n_atoms() == 3);
    CHECK(gp.base == std::vector<std::string>{"alive", "alive*", "dead"});
    CHECK(gp.atom_id("alive") == 0);
    CHECK(gp.atom_id("alive*") == 1);
    CHECK(gp.atom_id("dead") == 2);
    CHECK(gp.atom_name(2) == "dead");
}

TEST_CASE("grounding deduplicates repeated instances") {
    const GroundProgram gp = ground(parse_program("p :- q. p :- q."));
    CHECK(gp.rules.size() == 1);
}

TEST_CASE("grounding is idempotent through to_program") {
    const GroundProgram gp = ground(parse_program(
        "p(a,a). p(b,c). tr(X,Y) :- p(X,Y). tr(X,Y) :- p(X,Z), tr(Z,Y)."));
    const Program back = to_program(gp);
    CHECK(ground(back) == gp);
}

TEST_CASE("grounding caps and failure modes") {
    CHECK_THROWS_AS(ground(parse_program("p(a,a). p(b,c). tr(X,Y) :- p(X,Y)."), 3), CapError);
    // Positive-arity predicates with no constant anywhere cannot be grounded.
    CHECK_THROWS_AS(ground(parse_program("p(X) :- q(X).")), GroundingError);
    // A propositional program grounds to itself.
    const GroundProgram gp = ground(parse_program("p :- not q."));
    CHECK(gp.base == std::vector<std::string>{"p", "q"});
    REQUIRE(gp.rules.size() == 1);
    CHECK(gp.rules[0].head == gp.atom_id("p"));
    CHECK(gp.rules[0].naf == std::vector<AtomId>{*gp.atom_id("q")});
}
