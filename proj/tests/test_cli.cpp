#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef QNIL_BIN
#define QNIL_BIN "qnil"
#endif
#ifndef QNIL_DATA
#define QNIL_DATA "."
#endif

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(QNIL_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string data(const std::string& name) { return std::string(QNIL_DATA) + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("exit code 0: checks pass") {
    CHECK(run("strings --N 3 --input " + data("strings_demo.json")) == 0);
    CHECK(run("matrix --N 3 --preset cyclic") == 0);
    CHECK(run("hochschild --N 2 --nmax 3 --input " + data("dual_numbers.json")) == 0);
}

TEST_CASE("exit code 1: a mathematical check fails") {
    // d^N != 0 for a rational q that is no root of unity
    CHECK(run("tensor --N 2 --q 2 --nmax 3 --input " + data("c.json") +
              " --checks nilpotency") == 1);
}

TEST_CASE("exit code 2: invalid input") {
    SUBCASE("missing input") { CHECK(run("hochschild --N 2") == 2); }
    SUBCASE("malformed JSON") {
        write_file("/tmp/qnil_cli_bad.json", "{\"dim\": 1,");
        CHECK(run("hochschild --N 2 --input /tmp/qnil_cli_bad.json") == 2);
    }
    SUBCASE("empty facet") {
        write_file("/tmp/qnil_cli_facet.json",
                   R"({"vertices": ["a"], "facets": [[]]})");
        CHECK(run("simplicial --N 2 --input /tmp/qnil_cli_facet.json") == 2);
    }
    SUBCASE("associativity violation carries a witness") {
        write_file("/tmp/qnil_cli_assoc.json", R"({
            "dim": 3,
            "unit": ["1", "0", "0"],
            "sc": [[["1","0","0"],["0","1","0"],["0","0","1"]],
                   [["0","1","0"],["0","0","1"],["1","0","0"]],
                   [["0","0","1"],["0","0","0"],["0","0","0"]]]
        })");
        CHECK(run("hochschild --N 2 --input /tmp/qnil_cli_assoc.json") == 2);
    }
    SUBCASE("hexagon needs cyclotomic mode") {
        CHECK(run("strings --N 3 --q 2 --input " + data("strings_demo.json") +
                  " --checks hexagon") == 2);
    }
    SUBCASE("rational q = 0 or 1 is rejected") {
        CHECK(run("tensor --N 2 --q 1 --input " + data("c.json")) == 2);
    }
}

TEST_CASE("exit code 3: resource cap") {
    CHECK(run("hochschild --N 2 --nmax 20 --input " + data("dual_numbers.json")) == 3);
    CHECK(run("tensor --N 2 --nmax 3 --cap 4 --input " + data("dual_numbers.json")) == 3);
}

TEST_CASE("reports are deterministic and timing-free") {
    REQUIRE(run("random-strings --N 3 --seed 11 --report /tmp/qnil_cli_r1.json") == 0);
    REQUIRE(run("random-strings --N 3 --seed 11 --report /tmp/qnil_cli_r2.json") == 0);
    const std::string a = slurp("/tmp/qnil_cli_r1.json");
    CHECK(a == slurp("/tmp/qnil_cli_r2.json"));
    CHECK(a.find("\"scenario\"") != std::string::npos);
    CHECK(a.find("elapsed") == std::string::npos);
}
