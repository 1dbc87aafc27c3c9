#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "lgtoric/cli.hpp"
#include "lgtoric/expr.hpp"
#include "lgtoric/lattice.hpp"

using json = nlohmann::json;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = lgtoric::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const std::string path = "lgtoric_cli_" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("cli periods compute")
{
    const auto r = invoke({"periods", "compute", "--f", "x+y+x^-1*y^-1", "--N", "9"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    std::vector<std::string> values;
    for (const auto& c : j["coeffs"])
        values.push_back(c["value"]);
    CHECK(values == std::vector<std::string>{"1", "0", "0", "6", "0", "0", "90", "0", "0", "1680"});
    CHECK(j["N"] == 9);

    // Output does not depend on the thread count or on pruning.
    const auto f = "x+2*y+1/(x*y*z)+z+x*z^-1";
    const auto a = invoke({"--threads", "1", "periods", "compute", "--f", f, "--N", "7"});
    const auto b = invoke({"--threads", "4", "periods", "compute", "--f", f, "--N", "7"});
    const auto c = invoke({"periods", "compute", "--f", f, "--N", "7", "--unpruned"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("cli exit codes and diagnostics")
{
    CHECK(invoke({}).code == lgtoric::cli::kInputError);
    CHECK(invoke({"--help"}).code == lgtoric::cli::kSuccess);
    CHECK(invoke({"periods", "compute", "--N", "3"}).code == lgtoric::cli::kInputError);

    const auto bad = invoke({"periods", "compute", "--f", "x+*y", "--N", "3"});
    CHECK(bad.code == lgtoric::cli::kInputError);
    CHECK(bad.err.find("line 1, column 3") != std::string::npos);

    const auto path = temp_file("bad.txt", "dim 2\n1 0\n0 1\n-1 x\n");
    const auto poly = invoke({"polytope", "analyze", path});
    CHECK(poly.code == lgtoric::cli::kInputError);
    CHECK(poly.err.find("line 4, column 4") != std::string::npos);
    std::remove(path.c_str());

    CHECK(invoke({"polytope", "analyze", "/nonexistent/file"}).code == lgtoric::cli::kInputError);

    const auto script = invoke({"delpezzo", "build", "--script", "base P2;blowup 0 0 q1"});
    CHECK(script.code == lgtoric::cli::kInputError);
}

TEST_CASE("cli polytope and minkowski")
{
    const auto path = temp_file("p2.txt", "dim 2\n1 0\n0 1\n-1 -1\n");
    const auto a = json::parse(invoke({"polytope", "analyze", path}).out);
    CHECK(a["reflexive"] == true);
    CHECK(a["boundary_points"] == 3);
    CHECK(a["dual_boundary_points"] == 9);
    CHECK(a["boundary_sum"] == 12);
    CHECK(a["volume"] == 3);

    const auto d = invoke({"polytope", "dual", path});
    REQUIRE(d.code == 0);
    const auto dj = json::parse(d.out);
    CHECK(lgtoric::parse_polytope(dj["text"].get<std::string>()).vertices().size() == 3);
    std::remove(path.c_str());

    const auto hex = temp_file("hex.txt", "dim 2\n1 0\n1 1\n0 1\n-1 0\n-1 -1\n0 -1\n");
    const auto m = json::parse(invoke({"minkowski", "decompose", hex}).out);
    CHECK(m["decompositions"].size() >= 2);
    std::remove(hex.c_str());

    const auto oct = temp_file("oct.txt", "dim 3\n1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n0 0 -1\n");
    const auto e = json::parse(invoke({"minkowski", "enumerate", oct}).out);
    CHECK(e["minkowski"] == true);
    REQUIRE(e["count"].get<int>() >= 1);
    // Polynomials round-trip through the parser.
    for (const auto& s : e["polynomials"]) {
        const auto f = lgtoric::parse_laurent(s.get<std::string>(), {}, 3);
        CHECK(lgtoric::to_string(f) == s.get<std::string>());
    }

    const auto inf = invoke({"threefold", "infinity", oct});
    REQUIRE(inf.code == 0);
    CHECK(json::parse(inf.out)["components"] == 26);
    const auto fc = invoke({"threefold", "facets", oct});
    CHECK(fc.code == 0);
    CHECK(json::parse(fc.out)["facets"].size() == 8);
    std::remove(oct.c_str());
}

TEST_CASE("cli periods match and recurrence")
{
    CHECK(invoke({"periods", "match", "--f", "x+y+q0/(x*y)", "--N", "9", "--toric", "p2"}).code == 0);
    CHECK(invoke({"periods", "match", "--f", "x+y+1/(x*y)", "--N", "6", "--toric", "p2", "--params", "q0=1"}).code ==
          0);
    const auto wrong = invoke({"periods", "match", "--f", "x+y+2/(x*y)", "--N", "6", "--toric", "p2", "--params", "q0=1"});
    CHECK(wrong.code == lgtoric::cli::kVerificationFailed);
    CHECK(json::parse(wrong.out)["first_mismatch"] == 3);
    CHECK(invoke({"periods", "match", "--f", "x", "--toric", "p5"}).code == lgtoric::cli::kInputError);

    const auto toric = temp_file("p1p1.json",
                                 R"({"rays": [[1,0],[-1,0],[0,1],[0,-1]], "relations": [[1,1,0,0],[0,0,1,1]],
                                     "parameters": ["q0", "q1"]})");
    CHECK(invoke({"periods", "match", "--f", "x+q0/x+y+q1/y", "--N", "8", "--toric-json", toric}).code == 0);
    std::remove(toric.c_str());

    const auto r = invoke({"periods", "recurrence", "--f", "x+y+1/(x*y)", "--N", "30", "--max-order", "3"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["order"] == 3);
    CHECK(j["text"] == "(k^2+6*k+9)*c(k+3) + (-27*k^2-81*k-54)*c(k) = 0");
    CHECK(invoke({"periods", "recurrence", "--f", "x+y+1/(x*y)"}).out.find("\"found\":false") != std::string::npos);

    const auto s = json::parse(invoke({"periods", "recurrence", "--sequence", "1,2,6,20,70,252,924,3432,12870,48620,184756,705432,2704156"}).out);
    CHECK(s["found"] == true);
    CHECK(s["text"] == "(k+1)*c(k+1) + (-4*k-2)*c(k) = 0");
}

TEST_CASE("cli delpezzo")
{
    const auto b = invoke({"delpezzo", "build", "--script", "base P2\nblowup 0 -1 q1\nblowup 1 1 q2"});
    REQUIRE(b.code == 0);
    const auto j = json::parse(b.out);
    CHECK(j["degree"] == 7);
    CHECK(j["f_surface"] == "q2*x*y+x+y+q0*q1*y^-1+q0*x^-1*y^-1");

    const auto bp = invoke({"delpezzo", "basepoints", "--script", "base P2;blowup 0 -1 q1;blowup 1 1 q2"});
    CHECK(bp.code == 0);
    const auto bj = json::parse(bp.out);
    CHECK(bj["total"] == 5);
    CHECK(bj["expected"] == 5);
}

TEST_CASE("cli fixtures")
{
    const auto r = invoke({"fixtures", "verify", "--all"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["checks"].size() == 7);
    CHECK(invoke({"fixtures", "verify", "--name", "s7-mutation"}).code == 0);
    CHECK(invoke({"fixtures", "verify", "--name", "8-8"}).code == lgtoric::cli::kInputError);

    const auto pretty = invoke({"--pretty", "fixtures", "verify", "--name", "2-1"});
    CHECK(pretty.out.find("passed: true") != std::string::npos);
}
