#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lpsem/cli.hpp"
#include "lpsem/render.hpp"

using namespace lpsem;

namespace {

const char* kDeadAlive = "dead :- not alive. alive :- not alive*. alive* :- not alive.";
const char* kTrans = "p(a,a). p(b,c). tr(X,Y) :- p(X,Y). tr(X,Y) :- p(X,Z), tr(Z,Y).";

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("solve defaults to stable models on stdin") {
    const RunResult r = run({"solve"}, kDeadAlive);
    CHECK(r.code == 0);
    CHECK(r.out == "{alive}\n{alive*, dead}\n");
    CHECK(r.err == "");
}

TEST_CASE("'-' names stdin explicitly") {
    const RunResult r = run({"solve", "-"}, kDeadAlive);
    CHECK(r.code == 0);
    CHECK(r.out == "{alive}\n{alive*, dead}\n");
}

TEST_CASE("solve reads a program file") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "lpsem_cli_test.lp";
    {
        std::ofstream f(path);
        f << kDeadAlive << '\n';
    }
    const RunResult r = run({"solve", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "{alive}\n{alive*, dead}\n");
    fs::remove(path);
}

TEST_CASE("an unreadable file is a parse failure") {
    const RunResult r = run({"solve", "/nonexistent/zzz.lp"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error: cannot open") != std::string::npos);
    CHECK(r.out == "");
}

TEST_CASE("projection restricts, reorders and deduplicates") {
    const RunResult r = run({"solve", "--project", "dead,alive"}, kDeadAlive);
    CHECK(r.code == 0);
    CHECK(r.out == "{alive}\n{dead}\n");

    const RunResult jr = run({"solve", "--project", "dead, alive", "--format", "json"},
                             kDeadAlive);
    CHECK(jr.code == 0);
    const Json j = Json::parse(jr.out);
    CHECK(j["semantics"] == "stable");
    CHECK(j["models"] == Json::parse(R"([["alive"], ["dead"]])"));

    // Projecting everything away leaves one empty model.
    const RunResult er = run({"solve", "--project", "nosuchatom"}, kDeadAlive);
    CHECK(er.code == 0);
    CHECK(er.out == "{}\n");
}

TEST_CASE("solve renders partial semantics as labeled sets") {
    const RunResult wf = run({"solve", "--semantics", "wf"}, kDeadAlive);
    CHECK(wf.code == 0);
    CHECK(wf.out == "true: {} false: {} undefined: {alive, alive*, dead}\n");

    const RunResult ps = run({"solve", "--semantics", "pstable"}, kDeadAlive);
    CHECK(ps.code == 0);
    CHECK(ps.out ==
          "true: {} false: {} undefined: {alive, alive*, dead}\n"
          "true: {alive} false: {alive*, dead} undefined: {}\n"
          "true: {alive*, dead} false: {alive} undefined: {}\n");

    const RunResult jwf = run({"solve", "--semantics", "wf", "--format", "json"}, kDeadAlive);
    const Json j = Json::parse(jwf.out);
    CHECK(j["semantics"] == "wf");
    CHECK(j["true"] == Json::array());
    CHECK(j["undefined"] == Json::parse(R"(["alive", "alive*", "dead"])"));
}

TEST_CASE("JSON model listings parse back to the same sets") {
    const RunResult r = run({"solve", "--format", "json"}, kDeadAlive);
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["semantics"] == "stable");
    CHECK(j["models"] == Json::parse(R"([["alive"], ["alive*", "dead"]])"));
}

TEST_CASE("semantics preconditions map to exit code 3") {
    const RunResult least = run({"solve", "--semantics", "least"}, "p :- not q.");
    CHECK(least.code == 3);
    CHECK(least.err.find("error:") == 0);
    CHECK(least.err.find("definite") != std::string::npos);

    const RunResult perfect = run({"solve", "--semantics", "perfect"}, kDeadAlive);
    CHECK(perfect.code == 3);
    CHECK(perfect.err.find("not stratified") != std::string::npos);
}

TEST_CASE("bad input maps to exit code 1") {
    const RunResult r = run({"solve"}, "p :- .");
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") == 0);
    CHECK(r.out == "");
}

TEST_CASE("exceeding a cap maps to exit code 2") {
    const RunResult r = run({"solve", "--semantics", "supported", "--max-atoms", "5"}, kTrans);
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("embed prints the modal theories") {
    const RunResult ael = run({"embed", "--target", "ael"}, "p :- not q.");
    CHECK(ael.code == 0);
    CHECK(ael.out == "p <- ~K q\n");

    const RunResult dl = run({"embed", "--target", "dl"}, "p :- not q.");
    CHECK(dl.code == 0);
    CHECK(dl.out == ": ~q / p\n");

    const RunResult jr = run({"embed", "--target", "ael", "--format", "json"}, "p :- not q.");
    const Json j = Json::parse(jr.out);
    CHECK(j["target"] == "ael");
    REQUIRE(j["formulas"].size() == 1);
    CHECK(j["formulas"][0]["head"] == "p");
    CHECK(j["formulas"][0]["not_believed"] == Json::parse(R"(["q"])"));
}

TEST_CASE("expansions and extensions subcommands") {
    const RunResult es = run({"expansions"}, "p :- not q.");
    CHECK(es.code == 0);
    CHECK(es.out ==
          "expansion 1: believed {p}\n"
          "  worlds (2):\n"
          "    {p}\n"
          "    {p, q}\n");

    const RunResult xs = run({"extensions"}, kDeadAlive);
    CHECK(xs.code == 0);
    CHECK(xs.out == "{alive}\n{alive*, dead}\n");
}

TEST_CASE("compare prints only the relation checks") {
    const RunResult r = run({"compare"}, "p :- not q.");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.rfind("  [", 0) == 0);
        ++count;
    }
    CHECK(count == 3);

    const RunResult jr = run({"compare", "--format", "json"}, "p :- not q.");
    const Json j = Json::parse(jr.out);
    REQUIRE(j["relations"].size() == 3);
    CHECK(j["relations"][0]["id"] == "stable-subset-completion");
    CHECK(j["relations"][1]["id"] == "worlds-superset");
    CHECK(j["relations"][2]["id"] == "wf-bounds-stable");
}

TEST_CASE("diagnose JSON is deterministic across runs") {
    const RunResult a = run({"diagnose", "--format", "json"}, kDeadAlive);
    const RunResult b = run({"diagnose", "--format", "json"}, kDeadAlive);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j["negative_cycle"] == "alive -> alive* -> alive");
}

TEST_CASE("usage errors are rejected by the parser") {
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({"solve", "--no-such-flag"}).code != 0);
    CHECK(run({"solve", "--semantics", "bogus"}).code != 0);
    CHECK(run({"embed"}, "p.").code != 0); // --target is required
    CHECK(run({}).code != 0);              // a subcommand is required
    CHECK(run({"solve", "--max-atoms", "0"}).code != 0);
}

TEST_CASE("--help goes to stdout and succeeds") {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = run_cli({"--help"}, in, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("solve") != std::string::npos);
    CHECK(err.str() == "");
}
