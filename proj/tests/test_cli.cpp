#include <doctest.h>

#include <sstream>

#include "gfp/cli.hpp"
#include "gfp/serialize.hpp"

using gfp::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gfp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
    std::vector<Json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("expand") {
    const auto r = run({"expand", "--spec", "-,2,1,-2; -,12,8,-1; -,12,6,-1; -,12,4,-1; -,12,0,-1", "--N", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "[\"1\",\"2\",\"3\",\"6\",\"10\"]\n");

    const auto csv = run({"--csv", "expand", "--spec", "-,1,0,-1", "--N", "3"});
    CHECK(csv.out == "n,coefficient\n0,1\n1,1\n2,2\n3,3\n");

    CHECK(run({"expand", "--spec", "-,1,1,-1", "--N", "4"}).code == 2);
    CHECK(run({"expand", "--spec", "-,1,x", "--N", "4"}).code == 2);
    CHECK(run({"expand", "--spec", "-,1,0,-1", "--N", "-3"}).code == 2);
}

TEST_CASE("enumerate") {
    const auto r = run({"enumerate", "--variant", "colored", "--k", "2", "--alpha", "-1", "--n", "2"});
    CHECK(r.code == 0);
    const auto j = lines(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["count"] == "12");

    const auto listed = run({"enumerate", "--variant", "repetition", "--k", "2", "--alpha=-1", "--n", "2", "--list"});
    const auto l = lines(listed.out);
    REQUIRE(l.size() == 4);
    CHECK(l[0] == Json::parse(R"({"top":[],"bottom":[[2]]})"));
    CHECK(l[3]["count"] == "3");

    const auto colored = lines(run({"enumerate", "--variant", "colored", "--k", "2", "--alpha", "-1", "--n", "0", "--list"}).out);
    CHECK(colored[0] == Json::parse(R"({"top":[],"bottom":[[0,1]]})"));

    const auto guard = run({"enumerate", "--variant", "colored", "--k", "2", "--alpha", "-1", "--n", "31"});
    CHECK(guard.code == 2);
    CHECK(guard.err.find("enumeration_guard") != std::string::npos);
    CHECK(run({"enumerate", "--variant", "striped", "--k", "2", "--alpha", "-1", "--n", "3"}).code == 2);
    CHECK(run({"enumerate", "--variant", "colored", "--k", "0", "--alpha", "-1", "--n", "3"}).code == 2);
}

TEST_CASE("theorem") {
    const auto t1 = lines(run({"theorem", "--which", "1", "--k", "2", "--alpha", "-1", "--N", "3"}).out);
    CHECK(t1[0]["integral"] == true);
    CHECK(t1[0]["coefficients"] == Json::parse(R"(["1","2","3","6"])"));
    const auto t2 = lines(run({"theorem", "--which", "2", "--k", "2", "--alpha", "-1", "--N", "2"}).out);
    CHECK(t2[0]["coefficients"] == Json::parse(R"(["2","4","12"])"));
    CHECK(run({"theorem", "--which", "3", "--k", "2", "--alpha", "-1", "--N", "2"}).code == 2);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--target", "thm3", "--N", "104"});
    CHECK(r.code == 0);
    const auto j = lines(r.out)[0];
    CHECK(j["report"] == "phi_{2,-1}(5n+4) ≡ 0 mod 5, 21 witnesses");
    CHECK(j["claim"] == Json::parse(R"({"A":5,"B":4,"M":5,"verified_up_to":104,"status":"verified","subsumed":false})"));

    for (const char* target : {"thm4", "cor1", "cor2", "psi2", "thm3numerator", "jtp", "eulercube", "residue"}) {
        CAPTURE(target);
        const auto v = run({"verify", "--target", target, "--N", "40"});
        CHECK(v.code == 0);
        CHECK(lines(v.out)[0]["status"] == "pass");
    }
    CHECK(run({"verify", "--target", "thm9"}).code == 2);
}

TEST_CASE("scan") {
    const auto a = run({"scan", "--builtin", "phi2m1", "--N", "204", "--maxA", "8", "--maxM", "7"});
    CHECK(a.code == 0);
    const auto b = run({"scan", "--builtin", "phi2m1", "--N", "204", "--maxA", "8", "--maxM", "7"});
    CHECK(a.out == b.out);
    bool found = false;
    for (const auto& c : lines(a.out))
        found = found || c == Json::parse(R"({"A":5,"B":4,"M":5,"verified_up_to":204,"status":"verified","subsumed":false})");
    CHECK(found);

    const auto spec = run({"scan", "--spec", "-,2,0,1; +,2,0,1; +,2,2,1; -,1,0,-2", "--N", "204"});
    CHECK(spec.out.find(R"({"A":5,"B":4,"M":5,)") != std::string::npos);

    const auto csv = run({"--csv", "scan", "--builtin", "cphi2m1", "--N", "204"});
    CHECK(csv.out.rfind("A,B,M,verified_up_to,status,subsumed\n", 0) == 0);
    CHECK(csv.out.find("5,4,5,204,verified,false\n") != std::string::npos);

    CHECK(run({"scan", "--N", "204"}).code == 2);
    CHECK(run({"scan", "--builtin", "phi2m1", "--spec", "-,1,0,-1", "--N", "204"}).code == 2);
    CHECK(run({"scan", "--builtin", "phi2m1", "--N", "5"}).code == 2);
}

TEST_CASE("identities") {
    const auto r = run({"identities", "--N", "30"});
    CHECK(r.code == 0);
    const auto j = lines(r.out);
    CHECK(j.back()["failed"] == 0);
    CHECK(j.back()["passed"] == j.size() - 1);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"expand", "--bogus", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
    const std::vector<std::string> args{"identities", "--N", "25"};
    CHECK(run(args).out == run(args).out);
}
