#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/calmod.hpp"
#include "hecke/tables.hpp"

#include <algorithm>

using namespace hecke;

namespace {

const WeylGroup& h4() {
    static WeylGroup W(RootSystem::h4());
    return W;
}

const GoldenNum kC = GoldenNum::frac(1, 2);

bool in_F(const LocalRegion& r, int w) { return std::binary_search(r.F.begin(), r.F.end(), w); }

}  // namespace

TEST_CASE("regular region chi2") {
    const auto& W = h4();
    auto reg = tabulated_region(W, 2, kC);
    CHECK(reg.F.size() == 14);
    CHECK(reg.sign == tables::character(2).sign);
    auto sk = skew_check(W, reg);
    CHECK(sk.skew);
    CHECK(sk.certified);
    auto M = build_calibrated(W, reg);
    CHECK(M.dim == 14);
    CHECK(verify_relations(M).ok);
    CHECK(ds_test(M) == Temperedness::DiscreteSeries);
    // weights are w chi for w in F, one-dimensional
    for (int k = 0; k < M.dim; ++k) CHECK(M.basis_weights[k] == W.apply(reg.F[k], reg.chi.chi));
}

TEST_CASE("named region elements") {
    const auto& W = h4();
    for (int tag : {1, 14, 15, 16, 17}) {
        auto reg = tabulated_region(W, tag, kC);
        for (auto& w : tables::character(tag).region_words) CHECK(in_F(reg, W.parse(w)));
    }
    // both chi13 elements miss the region; their right multiples by s4 lie in it
    auto reg13 = tabulated_region(W, 13, kC);
    for (auto& w : tables::character(13).region_words) {
        CHECK_FALSE(in_F(reg13, W.parse(w)));
        CHECK(in_F(reg13, W.rmul(W.parse(w), 3)));
    }
}

namespace {

int count_regions(const WeylGroup& W, const LocalRegion& reg) {
    int n = static_cast<int>(reg.listing.size()), found = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> J;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) J.push_back(k);
        try {
            local_region(W, reg.chi, reg.listing, J);
            ++found;
        } catch (const NotARegion&) {
        }
    }
    return found;
}

}  // namespace

TEST_CASE("sign choices and empty regions") {
    const auto& W = h4();
    // four independent listed roots: every sign pattern is realized
    CHECK(count_regions(W, tabulated_region(W, 3, kC)) == 16);
    auto reg14 = tabulated_region(W, 14, kC);
    REQUIRE(reg14.listing.size() == 6);
    int n14 = count_regions(W, reg14);
    CHECK(n14 > 1);
    CHECK(n14 < 64);
}

TEST_CASE("one-dimensional modules and twists") {
    const auto& W = h4();
    const Mat& g = W.roots().gram();
    auto st = steinberg(g, {0, 1, 2, 3}, kC);
    auto tr = trivial_module(g, {0, 1, 2, 3}, kC);
    CHECK(verify_relations(st).ok);
    CHECK(verify_relations(tr).ok);
    CHECK(ds_test(st) == Temperedness::DiscreteSeries);
    CHECK(ds_test(tr) == Temperedness::NonTempered);
    // the Steinberg module is the calibrated module of chi1
    auto M1 = build_calibrated(W, tabulated_region(W, 1, kC));
    CHECK(M1.t == st.t);
    CHECK(M1.v == st.v);
    auto fw = W.roots().fundamental_weights();
    auto par = steinberg(g, {1, 2, 3}, kC);
    auto tw = twist_by(par, fw[0]);
    CHECK(verify_relations(tw).ok);
    CHECK_THROWS(twist_by(par, fw[1]));
}

TEST_CASE("star dual and IM twist stay modules") {
    const auto& W = h4();
    auto M = build_calibrated(W, tabulated_region(W, 4, kC));
    auto D = star_dual(W, M);
    CHECK(verify_relations(D).ok);
    auto I = im_twist(M);
    CHECK(verify_relations(I).ok);
    CHECK(ds_test(I) != Temperedness::DiscreteSeries);
}

TEST_CASE("restriction splits into calibrated summands") {
    const auto& W = h4();
    auto M = build_calibrated(W, tabulated_region(W, 14, kC));
    for (auto I : std::vector<std::vector<int>>{{1, 2, 3}, {0, 2, 3}, {0, 1}}) {
        int total = 0;
        for (auto& S : restrict_calibrated(M, I)) {
            CHECK(verify_relations(S).ok);
            total += S.dim;
        }
        CHECK(total == M.dim);
    }
    auto R = restrict_to(M, {0, 1, 2});
    CHECK(R.dim == M.dim);
    CHECK(R.gens == std::vector<int>{0, 1, 2});
}

TEST_CASE("Coxeter orders from the Gram matrix") {
    const Mat& g = h4().roots().gram();
    CHECK(coxeter_order(g, 0, 1) == 3);
    CHECK(coxeter_order(g, 0, 2) == 2);
    CHECK(coxeter_order(g, 2, 3) == 5);
}
