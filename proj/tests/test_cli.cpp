#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/cli.hpp"

#include <json.hpp>

#include <sstream>

using namespace hecke;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hecke");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dump roots and classes") {
    auto r = run({"dump", "roots"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 120);
    int pos = 0;
    for (auto& row : j["rows"]) pos += row["positive"].get<bool>();
    CHECK(pos == 60);
    auto c = run({"dump", "classes"});
    REQUIRE(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["rows"].size() == 34);
}

TEST_CASE("weight graph as DOT") {
    auto r = run({"--format", "dot", "weight-graph", "--chi", "chi15"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph") != std::string::npos);
    CHECK(r.out.find("->") != std::string::npos);
}

TEST_CASE("local region of chi1 is the longest element") {
    auto r = run({"local-region", "--chi", "chi1", "--words"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 1);
    CHECK(j["sign"] == "----");
    REQUIRE(j["F"].size() == 1);
    auto word = j["F"][0].get<std::string>();
    CHECK(word.size() == 2 * 60);
}

TEST_CASE("reproduce-tables summary line") {
    auto r = run({"--format", "csv", "reproduce-tables"});
    CHECK(r.code == 0);
    CHECK(r.out.find("17/17 characters, 17/17 dimensions, 17/17 sign vectors: MATCH") != std::string::npos);
}

TEST_CASE("bad input is rejected") {
    CHECK(run({"--no-such-flag"}).code != 0);
    CHECK(run({"build-module", "--chi", "chi18"}).code == 2);
    CHECK(run({"--c", "1/0", "dump", "roots"}).code != 0);
}
