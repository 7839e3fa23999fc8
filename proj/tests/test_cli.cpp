#include "besse/cli.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "besse");
    std::ostringstream out, err;
    int code = besse::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(BESSE_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

}  // namespace

TEST_CASE("invariants command") {
    RunResult r = run_cli({"invariants", "(-1,0;(2,1),(3,1),(5,1))"});
    CHECK(r.code == 0);
    CHECK(r.out.find("e = 1/30") != std::string::npos);
    CHECK(r.out.find("chi = 1/30") != std::string::npos);
    CHECK(r.out.find("chi/e = 1") != std::string::npos);
    CHECK(r.out.find("c1 trivial: yes") != std::string::npos);
    CHECK(r.out.find("H_1 = 0") != std::string::npos);
}

TEST_CASE("invariants honors --reverse-orientation and warns on e < 0") {
    RunResult r = run_cli({"invariants", "(-1,0)"});
    CHECK(r.err.find("warning") != std::string::npos);
    r = run_cli({"invariants", "--reverse-orientation", "(-1,0)"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("e = 1") != std::string::npos);
}

TEST_CASE("homology command") {
    RunResult r = run_cli({"homology", "(0,2;(2,1))"});
    CHECK(r.code == 0);
    CHECK(r.out.find("H_1 = Z^4") != std::string::npos);
    CHECK(r.out.find("mod-2 ranks: (1,4,4,1)") != std::string::npos);
}

TEST_CASE("chern command") {
    RunResult r = run_cli({"chern", "(0,2;(2,1))", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"trivial\":true") != std::string::npos);
    CHECK(r.out.find("\"b_corr\":5") != std::string::npos);

    RunResult again = run_cli({"chern", "(0,2;(2,1))", "--json"});
    CHECK(again.out == r.out);  // byte-identical across runs
}

TEST_CASE("classify command") {
    RunResult r = run_cli({"classify", "--chi", "pos", "--max-alpha", "5", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ADE(E8)") != std::string::npos);
    CHECK(r.out.find("ADE(E7)") != std::string::npos);
    CHECK(r.out.find("ADE(E6)") != std::string::npos);
    CHECK(r.out.find("ADE(D5)") != std::string::npos);
    CHECK(r.out.find("(-1,0;(2,1),(2,1),(3,1))") != std::string::npos);

    r = run_cli({"classify", "--chi", "zero", "--max-b", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("BoothbyWangTorus(2)") != std::string::npos);

    r = run_cli({"classify", "--chi", "neg-family", "--genus", "1", "--alphas", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(0,1;(2,1),(3,2))") != std::string::npos);
}

TEST_CASE("indices command") {
    RunResult r = run_cli({"indices", "(0,2;(2,1))", "--max-period", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("principal") != std::string::npos);
    CHECK(r.out.find("-10") != std::string::npos);
    CHECK(r.out.find("-5") != std::string::npos);
}

TEST_CASE("ade and ellipsoid commands") {
    RunResult r = run_cli({"ade", "E8"});
    CHECK(r.code == 0);
    CHECK(r.out == "(-1,0;(2,1),(3,1),(5,1))\n");

    r = run_cli({"ade", "D5"});
    CHECK(r.out == "(-1,0;(2,1),(2,1),(3,1))\n");

    r = run_cli({"ellipsoid", "1", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1,0)\n");
    CHECK(r.err.empty());

    r = run_cli({"ellipsoid", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);

    r = run_cli({"ellipsoid", "2", "4"});
    CHECK(r.code == 1);
}

TEST_CASE("e1 and sh reproduce the golden chart") {
    RunResult r = run_cli({"e1", "(0,2;(2,1))", "--pmax", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == read_golden("e1_genus2_entries.txt"));

    r = run_cli({"e1", "(0,2;(2,1))", "--pmax", "3", "--grid"});
    CHECK(r.code == 0);
    CHECK(r.out == read_golden("e1_genus2_grid.txt"));

    r = run_cli({"sh", "(0,2;(2,1))", "--pmax", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == read_golden("sh_genus2.txt"));
}

TEST_CASE("classification output matches its golden file") {
    RunResult r = run_cli({"classify", "--chi", "pos", "--max-alpha", "8", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == read_golden("classify_pos_8.json"));
}

TEST_CASE("sh refuses non-lacunary pages") {
    RunResult r = run_cli({"sh", "(1,0)", "--pmax", "3"});
    CHECK(r.code == 1);
    CHECK(r.out.find("non-lacunary") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 2);                                  // no subcommand
    CHECK(run_cli({"frobnicate"}).code == 2);                      // unknown
    CHECK(run_cli({"invariants"}).code == 2);                      // missing data
    CHECK(run_cli({"invariants", "(0,0;(2,4))"}).code == 2);       // bad data
    CHECK(run_cli({"invariants", "(0,1)"}).code == 1);             // e = 0
    CHECK(run_cli({"indices", "(1,0;(3,2))"}).code == 1);          // c1 nontrivial
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("json output is deterministic") {
    besse::testing::DataGen gen(83);
    for (int i = 0; i < 10; ++i) {
        besse::SeifertData d = gen.normalized_nonzero_e();
        std::vector<std::string> args = {"invariants", besse::render(d), "--json"};
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.out == b.out);
        if (a.code == 0) CHECK(a.out.find("\"data\"") == 1);
    }
}
