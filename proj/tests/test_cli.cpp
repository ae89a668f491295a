#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "ytg/cli.hpp"
#include "ytg/io.hpp"

using namespace ytg;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    Result r = run(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("topple and dominate") {
    Json t = run_json({"topple", "--graph", "complete:5", "--config", "5,-3,0,1,-4", "--word", "1112"});
    CHECK(t["config"] == Json::parse("[-6,-4,4,5,0]"));
    Json d = run_json({"dominate", "--graph", "complete:5", "--from", "5,-3,0,1,-4", "--to", "-6,-4,4,5,0"});
    CHECK(d["dominated"] == true);
    CHECK(d["lambda"] == Json::parse("[3,1,0,0,0]"));
    Json nd = run_json({"dominate", "--graph", "path:2", "--from", "0,1", "--to", "1,0"});
    CHECK(nd["dominated"] == false);
    CHECK(nd["reason"] == "not_dominated");
    // Output of one subcommand feeds another.
    Json d2 = run_json({"dominate", "--graph", "complete:5", "--from", "5,-3,0,1,-4", "--to", t["config"].dump()});
    CHECK(d2["lambda"] == d["lambda"]);
    Result text = run({"dominate", "--graph", "complete:5", "--from", "5,-3,0,1,-4", "--to", "-6,-4,4,5,0"});
    CHECK(text.out.find("lambda: [3,1,0,0,0]") != std::string::npos);
}

TEST_CASE("sequences") {
    Json s = run_json({"sequences", "--graph", "complete:5", "--from", "5,-3,0,1,-4", "--to", "-6,-4,4,5,0", "--tableaux"});
    CHECK(s["words"] == Json::parse(R"(["1112","1121","1211"])"));
    CHECK(s["count"] == "3");
    CHECK(s["tableaux"][2] == Json::parse("[[1,3,4],[2]]"));
    Json c = run_json({"sequences", "--graph", "complete:5", "--from", "5,-3,0,1,-4", "--to", "-6,-4,4,5,0", "--count-only"});
    CHECK(c["count"] == "3");
    CHECK_FALSE(c.contains("words"));
}

TEST_CASE("decomps") {
    Json d = run_json({"decomps", "--lambda", "4,3,1", "--n", "4", "--stats", "--poly"});
    CHECK(d["count"] == "5");
    CHECK(d["decompositions"].size() == 5);
    CHECK(d["decompositions"][3]["text"] == "T[1,3]*T[2,4]");
    CHECK(d["decompositions"][3]["stats"]["l3"] == 2);
    CHECK(poly_from_json(d["c"]).eval({{"z1", 1}, {"z2", 1}, {"z3", 1}, {"q", 1}}) == 5);
    Json sf = run_json({"decomps", "--lambda", "4,3,1,0", "--square-free-only"});
    CHECK(sf["count"] == "4");
    Json big = run_json({"decomps", "--lambda", "8,7,4,3,2,2,1", "--count-only"});
    CHECK(big["reduced"] == "T[1,5]*T[2,3]^2*T[6,8]");
    CHECK(big["n"] == 8);
}

TEST_CASE("series, hl, kostka, ortho") {
    Json s = run_json({"series", "--graph", "path:2", "--alpha", "1,0", "--max-size", "2"});
    CHECK(s["terms"].size() == 3);
    CHECK(s["terms"][1]["beta"] == Json::parse("[0,1]"));
    CHECK(s["terms"][1]["coef"]["text"] == "z1*z2*z3*q");

    Json hl = run_json({"hl", "--alpha", "2,1", "--n", "3", "--oracle"});
    CHECK(hl["agree"] == true);
    SchurExpansion e = schur_expansion_from_json(hl["expansion"]);
    CHECK(e.count(Partition({2, 1})) == 1);

    Json k = run_json({"kostka", "--lambda", "2,1", "--mu", "1,1,1", "--n", "3", "--oracle"});
    CHECK(k["kostka"] == "2");
    CHECK(k["agree"] == true);

    Json o = run_json({"ortho", "--moments", "hermite", "--n", "3", "--hankel"});
    CHECK(o["p"]["coefficients"] == Json::parse(R"(["0","-6","0","2"])"));
    CHECK(o["hankel"]["coefficients"] == Json::parse(R"(["0","-3","0","1"])"));
    // stated norm identity fails at even n, so --verify reports a failed check
    Result vr = run({"ortho", "--moments", "charlier:1", "--verify", "--up-to", "3", "--json"});
    CHECK(vr.code == 1);
    Json v = Json::parse(vr.out);
    CHECK(v["verify"]["passed"] == false);
    CHECK(v["verify"]["cross_ok"] == true);
    CHECK(v["verify"]["norm_with_sign_ok"] == true);
    Result dr = run({"ortho", "--moments", "dirac:1", "--verify", "--up-to", "3", "--json"});
    CHECK(dr.code == 1);
    Json dg = Json::parse(dr.out);
    CHECK(dg["verify"]["first_degenerate"] == 2);
}

TEST_CASE("reference examples all pass") {
    Json ex = run_json({"paper-examples"});
    CHECK(ex["passed"] == ex["total"]);
    for (const auto& e : ex["examples"]) {
        INFO(e.dump());
        CHECK(e["status"] == "pass");
    }
}

TEST_CASE("errors and exit codes") {
    Result unknown = run({"frobnicate"});
    CHECK(unknown.code == cli::UsageError);
    Json err = Json::parse(unknown.err);
    CHECK(err["error"] == "usage");

    Result missing = run({"dominate", "--graph", "path:2"});
    CHECK(missing.code == cli::UsageError);

    Result bad_int = run({"topple", "--graph", "path:2", "--config", "1,x", "--word", "1"});
    CHECK(bad_int.code == cli::UsageError);
    CHECK(Json::parse(bad_int.err)["error"] == "parse");

    Result domain = run({"topple", "--graph", "path:2", "--config", "1,0", "--word", "3"});
    CHECK(domain.code == cli::DomainError);
    CHECK(Json::parse(domain.err)["error"] == "domain");

    Result disconnected = run({"topple", "--graph", R"({"n":3,"edges":[[1,2]]})", "--config", "0,0,0", "--word", "1"});
    CHECK(disconnected.code == cli::DomainError);

    Result not_dominant = run({"decomps", "--lambda", "1,2,0"});
    CHECK(not_dominant.code == cli::DomainError);

    setenv("YTG_MAX_OBJECTS", "3", 1);
    Result budget = run({"decomps", "--lambda", "4,3,1,0"});
    unsetenv("YTG_MAX_OBJECTS");
    CHECK(budget.code == cli::BudgetError);
    CHECK(Json::parse(budget.err)["error"] == "budget");

    Result help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("dominate") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"hl", "--alpha", "3,1", "--n", "3", "--json"};
    CHECK(run(args).out == run(args).out);
}
