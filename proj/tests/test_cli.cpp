#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cli_invocations.hpp"
#include "json.hpp"

using namespace ultraword::cli;
using nlohmann::json;

namespace {

const std::string kDir = ULTRAWORD_FIXTURES;

std::string fx(const char* name) { return kDir + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& argv) {
    std::ostringstream out, err;
    const int code = run(argv, out, err);
    return {code, out.str(), err.str()};
}

json call_json(const std::vector<std::string>& argv) {
    const auto r = call(argv);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("parse_invocation") {
        const auto p = parse_invocation({"points", "--q", "2", "--K", "4", "--i", "0..3", "--j-max", "5"});
        CHECK(p.command == "points");
        CHECK(p.flags.at("K") == "4");
        CHECK(p.flags.at("i") == "0..3");
        const auto c = parse_invocation({"closure", "--rules", "r.json", "--premises", "a,b"});
        CHECK(c.command == "closure");
        CHECK(c.flags.at("premises") == "a,b");

        auto usage = [](std::vector<std::string> argv) {
            try {
                (void)parse_invocation(argv);
            } catch (const UsageError& e) {
                return std::string(e.what());
            }
            return std::string();
        };
        CHECK(usage({"points", "--K", "0"}).find("--K") != std::string::npos);
        CHECK(usage({"points", "--K", "0", "--i", "0..1", "--j-max", "1"}).find("--K") != std::string::npos);
        CHECK(usage({"points", "--i", "0..1", "--j-max", "1", "--bogus", "1"}).find("--bogus") != std::string::npos);
        CHECK(usage({"points", "--i", "3..1", "--j-max", "1"}).find("--i") != std::string::npos);
        CHECK(usage({"points", "--i", "0..1", "--j-max", "1", "--format", "xml"}).find("--format") != std::string::npos);
        CHECK(usage({"frobnicate"}) != "");
        CHECK(usage({}) != "");
        CHECK(usage({"decompose", "--spec", "s.json"}).find("--indices") != std::string::npos);
    }

    TEST_CASE("exit codes") {
        CHECK(call({"points", "--K", "0"}).code == kUsage);
        CHECK(call({"closure", "--rules", fx("missing.json")}).code == kIo);
        CHECK(call({"closure", "--rules", fx("spec_q1.json")}).code == kParse);
        CHECK(call({"closure", "--rules", fx("rules.json"), "--premises", "zz"}).code == kDomain);
        CHECK(call({"points", "--q", "2", "--i", "-1..0", "--j-max", "1"}).code == kDomain);
        CHECK(call({"ultraword", "--spec", fx("spec_q1.json"), "--m", "5", "--n", "0"}).code == kDomain);
        const auto r = call({"signature", "--rules", fx("rules.json"), "--perceived", "a,c", "--source", "b"});
        CHECK(r.code == kDomain);
        CHECK(r.out.empty());
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }

    TEST_CASE("points") {
        const auto r = call({"points", "--q", "2", "--K", "4", "--i", "0..1", "--j-max", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "i,j,t\n0,0,0\n0,1,1/8\n1,0,1/4\n1,1,3/8\n");
        const auto bounded = call_json({"points", "--q", "1", "--K", "1", "--m", "1", "--i", "0..1", "--j-max", "2", "--format", "json"});
        CHECK(bounded.size() == 4);
        CHECK(bounded.back() == json{{"i", "1"}, {"j", 0}, {"t", "1"}});
    }

    TEST_CASE("config defaults") {
        const auto j = call_json({"--config", fx("config.json"), "points", "--i", "0..0", "--j-max", "1"});
        CHECK(j[1]["t"] == "1/6");
        const auto csv = call({"--config", fx("config.json"), "points", "--format", "csv", "--i", "0..0", "--j-max", "0"});
        CHECK(csv.out == "i,j,t\n0,0,0\n");
    }

    TEST_CASE("paradigm and ultraword") {
        const auto p = call_json({"paradigm", "--spec", fx("spec_q4.json"), "--i", "0..0", "--j-max", "1"});
        REQUIRE(p.size() == 2);
        CHECK(p[1]["text"] == "green light This instruction is named ⌈1/4⌉.");
        const auto u = call_json({"ultraword", "--spec", fx("spec_q1.json"), "--m", "2", "--n", "1"});
        CHECK(u["conjuncts"] == 5);
        CHECK(u["H"].size() == 5);
        CHECK(u["H_size_closed_form"] == "5");
        CHECK(u["H"][4]["clause"] == "This description is named ⌈2⌉.");
    }

    TEST_CASE("closure") {
        const auto j = call_json({"closure", "--rules", fx("rules_conjunctive.json"), "--premises", "d"});
        CHECK(j["closure"] == json{"a", "b", "c", "d"});
        CHECK(j["derivation_order"].size() == 3);
        CHECK(call_json({"closure", "--rules", fx("rules.json")})["closure"].empty());
    }

    TEST_CASE("decompose") {
        const auto j = call_json({"decompose", "--spec", fx("spec_q1.json"), "--indices", "0:0,1:0,2:0"});
        CHECK(j["cardinalities"]["d"] == 3);
        CHECK(j["cardinalities"]["Q"] == 4);
        CHECK(j["pairwise_disjoint"] == true);
        const auto perm = call_json({"decompose", "--spec", fx("spec_q1.json"), "--indices", "0:0,1:0,2:0", "--mode",
                                     "permutational", "--axioms", "x,y"});
        CHECK(perm["cardinalities"]["Q"] == 12);
        CHECK(perm["cardinalities"]["total"] == 17);
    }

    TEST_CASE("signature") {
        const auto t = call_json({"signature", "--rules", fx("rules.json"), "--perceived", "a,c", "--theory"});
        CHECK(t["theory"] == json::parse(R"([{"premises":["a"],"conclusion":"c"}])"));
        const auto b = call_json({"signature", "--rules", fx("rules.json"), "--perceived", "a,c", "--source", "a"});
        CHECK_FALSE(b.contains("theory"));
        CHECK(b["behavior"]["tuples"].size() == 1);
        CHECK(b["behavior"]["j_prime"] == json::parse(R"([["a","a†"]])"));
    }

    TEST_CASE("converse") {
        const auto j = call_json({"converse", "--observations", fx("observations.json"), "--premises", "a"});
        CHECK(j["separate_vs_union"]["separate"] == json{"a", "b"});
        CHECK(j["separate_vs_union"]["united"] == json{"a", "b", "c"});
        CHECK(j["separate_vs_union"]["equal"] == false);
        CHECK(j["ri_prime"]["rules"].size() == 2);
    }

    TEST_CASE("st") {
        const auto j = call_json({"st", "--input", fx("subparticles.json")});
        CHECK(j["st"][0] == json::parse(R"([0,0,[[0,"2"]],[[0,"7"]]])"));
        CHECK(j["St"].size() == 3);
        const auto empty = call_json({"st", "--input", fx("subparticles_empty.json")});
        CHECK(empty["st"].empty());
        CHECK(empty["St"].empty());
        CHECK(empty["realism"].empty());
    }

    TEST_CASE("check") {
        for (const char* target : {"closure", "st", "signature"}) {
            const auto j = call_json({"check", "--target", target, "--samples", "8"});
            CHECK(j["passed"] == true);
            CHECK(j["cases"] == 8);
        }
        const auto a = call({"check", "--target", "closure", "--samples", "5", "--seed", "1"});
        const auto b = call({"check", "--target", "closure", "--samples", "5", "--seed", "1"});
        CHECK(a.out == b.out);
    }

    TEST_CASE("output file") {
        const std::string path = "ultraword_cli_test_output.json";
        const auto r = call({"--output", path, "closure", "--rules", fx("rules.json"), "--premises", "a"});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        CHECK(json::parse(in)["closure"] == json{"a", "b", "c"});
        std::remove(path.c_str());
    }

    TEST_CASE("every fixture invocation succeeds and repeats byte for byte") {
        for (const auto& argv : fixtures::cli_invocations(kDir)) {
            const auto first = call(argv);
            const auto second = call(argv);
            CHECK_MESSAGE(first.code == 0, argv[0] << ": " << first.err);
            CHECK(first.out == second.out);
            CHECK_FALSE(first.out.empty());
        }
    }
}
