#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/chars.hpp"
#include "hecke/cli.hpp"
#include "hecke/tables.hpp"

#include <set>

using namespace hecke;

namespace {

const WeylGroup& h4() {
    static WeylGroup W(RootSystem::h4());
    return W;
}

const GoldenNum kC = GoldenNum::frac(1, 2);

}  // namespace

TEST_CASE("tabulated representatives are residual and match their listings") {
    const auto& rs = h4().roots();
    for (int tag = 1; tag <= 17; ++tag) {
        CAPTURE(tag);
        const auto& cd = tables::character(tag);
        Character chi = tables::representative(tag, kC);
        CHECK(ho_check(rs, chi));
        for (auto& b : cd.P) CHECK((rs.pair(chi.chi, b) == kC || rs.pair(chi.chi, b) == -kC));
        for (auto& z : cd.Z) CHECK(rs.pair(chi.chi, z).is_zero());
        CHECK(static_cast<int>(p_set(rs, chi).size()) == 2 * static_cast<int>(z_set(rs, chi).size()) + 4);
        // the independent reconstruction lands on the same character
        CHECK(tables::representative_alt(tag, kC).chi == chi.chi);
    }
}

TEST_CASE("anti-dominant representative") {
    const auto& W = h4();
    Character chi = tables::representative(5, kC);
    auto [star, w] = antidominant(W, chi);
    CHECK(is_antidominant(W.roots(), star.chi));
    CHECK(W.apply(w, chi.chi) == star.chi);
    for (int z : z_set(W.roots(), chi)) CHECK(W.roots().positive(W.apply_root(w, z)));
    CHECK(same_orbit(W, chi.chi, star.chi));
    CHECK_FALSE(same_orbit(W, chi.chi, tables::representative(6, kC).chi));
}

TEST_CASE("scaling c rescales the orbits") {
    const auto& rs = h4().roots();
    auto half = enumerate_residual(rs, kC);
    auto one = enumerate_residual(rs, GoldenNum(1));
    REQUIRE(half.size() == one.size());
    std::multiset<GoldenNum> a, b;
    for (auto& p : half) a.insert(GoldenNum(4) * p.norm_sq);
    for (auto& p : one) b.insert(p.norm_sq);
    CHECK(a == b);
}

TEST_CASE("low rank residual orbits carry the closed-form norms") {
    for (auto t : {RootType::A1, RootType::A2, RootType::A3, RootType::I2_5, RootType::H3, RootType::A1xA1,
                   RootType::A2xA1, RootType::I2_5xA1}) {
        std::string detail;
        CHECK_MESSAGE(lowrank_norms_match(t, kC, &detail), root_type_name(t) << ": " << detail);
    }
    CHECK(enumerate_residual(RootSystem::build(RootType::A1), kC).size() == 1);
    CHECK(enumerate_residual(RootSystem::build(RootType::H3), kC).size() == 4);
    CHECK(enumerate_residual(h4().roots(), kC).size() == 17);
}

TEST_CASE("printed fourth H3 vector is not residual") {
    // the enumerated orbits carry the printed norms, but the printed vector does not
    auto h3 = RootSystem::build(RootType::H3);
    auto tab = lowrank_ds_table(RootType::H3, kC);
    REQUIRE(tab.size() == 4);
    for (int k = 0; k < 3; ++k) CHECK(ho_check(h3, tab[k].chi));
    CHECK_FALSE(ho_check(h3, tab[3].chi));
    CHECK(tab[3].norm_sq == GoldenNum(11) * kC * kC / GoldenNum(2));
}
