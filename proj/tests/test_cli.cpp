#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLIQUEALG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("clique-poly text output") {
    auto r = run("clique-poly corpus:pentagon");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 - 5z + 5z^2\n");

    auto d = run("clique-poly corpus:dodecahedron");
    CHECK(d.exit_code == 0);
    CHECK(d.out == "1 - 20z + 30z^2\n");
}

TEST_CASE("hilbert: all four methods agree on the pentagon") {
    std::string expect = "1 + 5z + 20z^2 + 75z^3 + 275z^4 + 1000z^5\n";
    for (const std::string method : {"clique", "groebner", "monoid", "oracle"}) {
        auto r = run("hilbert corpus:pentagon --degree 5 --method " + method +
                     (method == "monoid" ? " --signs zero" : ""));
        CHECK(r.exit_code == 0);
        CHECK(r.out == expect);
    }
}

TEST_CASE("hilbert json output round-trips") {
    auto r = run("hilbert corpus:pentagon --degree 4 --format json");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["truncation"] == 4);
    CHECK(j["coefficients"] == json::array({1, 5, 20, 75, 275}));
}

TEST_CASE("groebner text output lists the pentagon rules") {
    auto r = run("groebner corpus:pentagon --order x1,x3,x5,x2,x4 --degree 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x1*x5 -> -x5*x1") != std::string::npos);
    CHECK(r.out.find("x1*x4*x5 -> x5*x1*x4") != std::string::npos);
    CHECK(r.out.find("x1*x4^2*x5 -> -x5*x1*x4^2") != std::string::npos);
    CHECK(r.out.find("x1*x4^4*x5 -> -x5*x1*x4^4") != std::string::npos);
}

TEST_CASE("groebner json output uses vertex ids") {
    auto r = run("groebner corpus:k2 --degree 4 --format json");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["degree_bound"] == 4);
    REQUIRE(j["rules"].size() == 1);
    CHECK(j["rules"][0]["lhs"] == json::array({2, 1}));
    CHECK(j["rules"][0]["rhs"][0]["word"] == json::array({1, 2}));
    CHECK(j["rules"][0]["rhs"][0]["coefficient"] == "-1");
}

TEST_CASE("inert subcommand") {
    auto pent = run("inert corpus:pentagon");
    CHECK(pent.exit_code == 0);
    CHECK(pent.out.find("inert") == 0);

    auto k3 = run("inert corpus:k3 --format json");
    CHECK(k3.exit_code == 0);
    auto j = json::parse(k3.out);
    CHECK(j["triangle_free"] == false);
    CHECK(j["matches"] == false);
    CHECK(j["witness_triangle"] == json::array({1, 2, 3}));

    auto dodec = run("inert corpus:dodecahedron --format json");
    auto jd = json::parse(dodec.out);
    CHECK(jd["triangle_free"] == true);
    CHECK(jd["matches"] == true);
    CHECK(jd["clique_polynomial"] == "1 - 20z + 30z^2");
}

TEST_CASE("traces subcommand") {
    auto r = run("traces corpus:free3 --weight 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\nx1\nx2\nx3\n");
}

TEST_CASE("cartier-foata subcommand") {
    auto r = run("cartier-foata corpus:section4 --weight 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
}

TEST_CASE("verify prints one line per check and exits 0") {
    auto r = run("verify corpus:pentagon --degree 5 --trials 2");
    CHECK(r.exit_code == 0);
    int lines = 0, passes = 0;
    for (size_t pos = 0; (pos = r.out.find('\n', pos)) != std::string::npos; ++pos) ++lines;
    for (size_t pos = 0; (pos = r.out.find("PASS", pos)) != std::string::npos; ++pos) ++passes;
    CHECK(lines == 7);
    CHECK(passes == 7);
}

TEST_CASE("dga subcommand") {
    auto r = run("dga corpus:k2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("relations:") != std::string::npos);
    CHECK(r.out.find("degree 3") != std::string::npos);

    auto j = json::parse(run("dga corpus:k2 --format json").out);
    CHECK(j["generators"].size() == 2);
    CHECK(j["relations"].size() == 1);
    CHECK(j["dga_generators"][0]["degree"] == 3);
}

TEST_CASE("graph files parse; bad input exits 2") {
    const char* path = "cli_test_graph.txt";
    {
        std::ofstream f(path);
        f << "# a 4-cycle\nv 1 1\nv 2 1\nv 3 1\nv 4 1\n"
          << "e 1 2\ne 2 3\ne 3 4\ne 1 4\n";
    }
    auto r = run(std::string("clique-poly ") + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 - 4z + 4z^2\n");
    std::remove(path);

    CHECK(run("clique-poly corpus:nope").exit_code == 2);
    CHECK(run("clique-poly no_such_file.txt").exit_code == 2);
    CHECK(run("hilbert corpus:pentagon --method monoid --signs default").exit_code == 2);
    CHECK(run("hilbert corpus:pentagon --method bogus").exit_code == 2);
    CHECK(run("hilbert corpus:pentagon --signs explicit").exit_code == 2);
}
