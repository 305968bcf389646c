#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/rootsys.hpp"

#include <map>

using namespace hecke;

TEST_CASE("H4 root data") {
    auto rs = RootSystem::h4();
    CHECK(rs.rank() == 4);
    CHECK(rs.nroots() == 120);
    CHECK(rs.npos() == 60);
    for (int r = 0; r < rs.nroots(); ++r) {
        CHECK(rs.norm_sq(rs.root(r)) == GoldenNum(2));
        CHECK(rs.root(rs.neg(r)) == vec_scale(GoldenNum(-1), rs.root(r)));
        CHECK(rs.find(rs.root(r)) == r);
    }
    const Mat& g = rs.gram();
    CHECK(g(0, 1) == GoldenNum(-1));
    CHECK(g(1, 2) == GoldenNum(-1));
    CHECK(g(2, 3) == GoldenNum(-2) * gold_a());
    CHECK(g(0, 2).is_zero());
}

TEST_CASE("fundamental weights are dual to the simple roots") {
    auto rs = RootSystem::h4();
    auto fw = rs.fundamental_weights();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(rs.pair(fw[i], rs.root(j)) == GoldenNum(i == j ? 1 : 0));
}

TEST_CASE("reflections permute the roots") {
    auto rs = RootSystem::h4();
    for (int i = 0; i < 4; ++i) {
        CHECK(rs.reflect_index(i, i) == rs.neg(i));
        int moved_negative = 0;
        for (int r = 0; r < rs.npos(); ++r) {
            int s = rs.reflect_index(i, r);
            CHECK(rs.root(s) == rs.reflect(i, rs.root(r)));
            moved_negative += !rs.positive(s);
        }
        CHECK(moved_negative == 1);
    }
}

TEST_CASE("ambient coordinates round trip") {
    auto rs = RootSystem::h4();
    REQUIRE(rs.has_ambient());
    for (int r = 0; r < rs.nroots(); r += 7) CHECK(rs.from_ambient(rs.to_ambient(rs.root(r))) == rs.root(r));
}

TEST_CASE("rank two subsystems and parabolic roots") {
    auto rs = RootSystem::h4();
    std::map<std::string, int> count;
    for (auto& s : rs.rank2_subsystems()) count[s.type]++;
    CHECK(count["I2(5)"] == 72);
    CHECK(count["A2"] == 200);
    CHECK(count["A1xA1"] == 450);
    CHECK(rs.parabolic_roots({1, 2, 3}).size() == 30);
    CHECK(rs.parabolic_roots({0, 2, 3}).size() == 12);
    CHECK(rs.parabolic_roots({0, 1, 2}).size() == 12);
}

TEST_CASE("low rank systems") {
    CHECK(RootSystem::build(RootType::H3).nroots() == 30);
    CHECK(RootSystem::build(RootType::I2_5).nroots() == 10);
    CHECK(RootSystem::build(RootType::A3).nroots() == 12);
    CHECK(RootSystem::build(RootType::A2xA1).nroots() == 8);
    CHECK(parse_root_type("H3") == RootType::H3);
    CHECK_THROWS(parse_root_type("E8"));
}
