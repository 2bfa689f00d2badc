#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = aperylab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli info") {
    const auto r = run({"info", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("m = 2\ne = 2\nF = 1\ng = 1\n") != std::string::npos);
    CHECK(run({"info", "2 3"}).out == r.out);
}

TEST_CASE("cli info JSON round-trips through its generators") {
    const auto first = run({"info", "6,9,10,15", "--format", "json"});
    REQUIRE(first.code == 0);
    const auto doc = nlohmann::json::parse(first.out);
    CHECK(doc["generators"] == nlohmann::json({6, 9, 10}));
    CHECK(doc["apery_set"].size() == 6);
    std::string gens;
    for (const auto& g : doc["generators"]) gens += (gens.empty() ? "" : ",") + std::to_string(g.get<long long>());
    CHECK(run({"info", gens, "--format", "json"}).out == first.out);
}

TEST_CASE("cli elasticity table") {
    const auto r = run({"elasticity", "5,6,9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("18\t{2, 3}\t3/2") != std::string::npos);
    CHECK(r.out.find("MAE = 11/10") != std::string::npos);
    CHECK(r.out.find("AHF = false") != std::string::npos);
    CHECK(r.out.find("R(Ap(S)) = {1, 3/2}") != std::string::npos);

    const auto dec = run({"elasticity", "5,6,9", "--decimal"});
    CHECK(dec.out.find("MAE = 11/10 (1.1000)") != std::string::npos);

    const auto one = run({"elasticity", "5,6,9", "18", "--format", "json"});
    const auto doc = nlohmann::json::parse(one.out);
    CHECK(doc["n"] == 18);
    CHECK(doc["length_set"] == nlohmann::json({2, 3}));
    CHECK(doc["elasticity"]["num"] == 3);
    CHECK(doc["elasticity"]["den"] == 2);

    const auto all = nlohmann::json::parse(run({"elasticity", "5,6,9", "--format", "json"}).out);
    CHECK(all["ahf"] == false);
    CHECK(all["ahff"]["num"] == 4);
    CHECK(all["mae"]["den"] == 10);
    CHECK(all["apery_elasticities"].size() == 5);

    CHECK(run({"elasticity", "5,6,9", "13"}).code == aperylab::cli::kExitUsage);
}

TEST_CASE("cli poset") {
    const auto dot = run({"poset", "9,12,19", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("n50 -> n62;") != std::string::npos);

    const auto js = run({"poset", "9,12,19", "--json", "--width", "--graded"});
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["elements"].size() == 9);
    CHECK(doc["covers"].size() == 12);
    CHECK(doc["width"] == 3);
    CHECK(doc["graded"] == true);

    CHECK(run({"poset", "9,12,19", "--dot", "--json"}).code == aperylab::cli::kExitUsage);
}

TEST_CASE("cli family") {
    const auto ok = run({"family", "master", "a=3", "b=2", "p=3", "--verify"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("S = <5,6,9>") != std::string::npos);

    const auto js = nlohmann::json::parse(run({"family", "apery-choice", "m=5", "T=4", "--verify", "--format", "json"}).out);
    CHECK(js["verified"] == true);
    CHECK(js["T"] == nlohmann::json({4}));

    CHECK(run({"family", "non-ahf-choice", "m=6", "T=", "--verify"}).code == 0);
    CHECK(run({"family", "master", "a=2", "b=1"}).code == aperylab::cli::kExitUsage);
    CHECK(run({"family", "master", "a=3"}).code == aperylab::cli::kExitUsage);
    CHECK(run({"family", "master", "a=3", "b=2", "z=1"}).code == aperylab::cli::kExitUsage);
    CHECK(run({"family", "nope"}).code == aperylab::cli::kExitUsage);
}

TEST_CASE("cli census") {
    const auto csv = run({"census", "--max-genus", "4"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("genus,multiplicity,count,ahf_count\n", 0) == 0);

    const auto js = nlohmann::json::parse(run({"census", "--max-genus", "5", "--format", "json"}).out);
    CHECK(js["cumulative"]["n"] == 1 + 1 + 2 + 4 + 7 + 12);
    CHECK(js["per_genus"][5]["n"] == 12);

    ::setenv("APERYLAB_MAX_GENUS", "3", 1);
    CHECK(run({"census", "--max-genus", "4"}).code == aperylab::cli::kExitUsage);
    ::unsetenv("APERYLAB_MAX_GENUS");

    std::atomic<bool> cancel{true};
    std::ostringstream out, err;
    CHECK(aperylab::cli::run({"census", "--max-genus", "10"}, out, err, &cancel) == aperylab::cli::kExitPartial);
}

TEST_CASE("cli verify and usage errors") {
    CHECK(run({"verify", "--theorem", "6", "--sweep", "2..5"}).code == 0);
    CHECK(run({"verify", "--theorem", "1", "--sweep", "8"}).code == 0);
    CHECK(run({"verify", "--theorem", "4"}).code == aperylab::cli::kExitUsage);
    CHECK(run({"verify", "--theorem", "3", "--sweep", "x"}).code == aperylab::cli::kExitUsage);
    CHECK(run({"info", "5,x,9"}).code == aperylab::cli::kExitUsage);
    CHECK(run({"info", "4,6"}).code == aperylab::cli::kExitUsage);
    CHECK(run({"info", "5,6", "--bogus"}).code == aperylab::cli::kExitUsage);
    CHECK(run({}).code == aperylab::cli::kExitUsage);
    CHECK(run({"--help"}).code == 0);
}
