#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/weyl.hpp"

#include <algorithm>
#include <set>

using namespace hecke;

namespace {

const WeylGroup& h4() {
    static WeylGroup W(RootSystem::h4());
    return W;
}

}  // namespace

TEST_CASE("order, longest element and Poincare polynomial") {
    const auto& W = h4();
    CHECK(W.size() == 14400);
    CHECK(W.length(W.longest()) == 60);
    // w_o = -1
    for (int r = 0; r < 4; ++r) CHECK(W.apply_root(W.longest(), r) == W.roots().neg(r));
    std::vector<long> by_len(61, 0);
    for (int w = 0; w < W.size(); ++w) by_len[W.length(w)]++;
    for (int l = 0; l <= 60; ++l) CHECK(by_len[l] == by_len[60 - l]);
    CHECK(by_len[1] == 4);
}

TEST_CASE("words, parsing and multiplication") {
    const auto& W = h4();
    int x = W.parse("s1s2s3s4"), y = W.parse("s4s3");
    CHECK(W.length(x) == 4);
    CHECK(W.mul(x, y) == W.parse("s1s2"));
    CHECK(W.mul(x, W.inverse(x)) == W.identity());
    CHECK(W.parse("w_o") == W.longest());
    CHECK(W.parse("e") == W.identity());
    CHECK(W.from_word(W.word(x)) == x);
    CHECK(W.lmul(0, x) == W.parse("s2s3s4"));
    CHECK(W.rmul(x, 3) == W.parse("s1s2s3"));
}

TEST_CASE("conjugacy classes") {
    const auto& W = h4();
    CHECK(W.num_classes() == 34);
    long total = 0;
    for (int c = 0; c < W.num_classes(); ++c) {
        total += W.class_size(c);
        CHECK(W.class_of(W.class_rep(c)) == c);
        // every element is conjugate to its inverse
        CHECK(W.class_of(W.inverse(W.class_rep(c))) == c);
    }
    CHECK(total == 14400);
    int x = W.parse("s1s3s4"), g = W.parse("s2s3s1s4");
    CHECK(W.class_of(x) == W.class_of(W.mul(g, W.mul(x, W.inverse(g)))));
}

TEST_CASE("coset representatives against brute force") {
    const auto& W = h4();
    std::vector<int> I{1, 2, 3};
    auto reps = W.min_left_coset_reps(I);
    CHECK(reps.size() == 120);
    CHECK(W.parabolic_subgroup(I).size() == 120);
    CHECK(W.min_left_coset_reps({0, 2, 3}).size() == 720);
    auto dc = W.min_double_coset_reps(I, I);
    // each double coset has a unique minimal element
    std::set<int> seen;
    auto sub = W.parabolic_subgroup(I);
    for (int d : dc) {
        for (int u : sub)
            for (int v : {sub.front(), sub.back()}) {
                int x = W.mul(u, W.mul(d, v));
                CHECK(W.length(x) >= W.length(d));
            }
        CHECK(seen.insert(d).second);
    }
    CHECK(W.length(W.longest_in(I)) == 15);
    CHECK(W.in_subgroup(W.longest_in(I), I));
    CHECK_FALSE(W.in_subgroup(W.parse("s1"), I));
}

TEST_CASE("Bruhat order and stabilizers") {
    const auto& W = h4();
    CHECK(W.bruhat_le(W.parse("s1s3"), W.parse("s1s2s3")));
    CHECK_FALSE(W.bruhat_le(W.parse("s1s2s3"), W.parse("s1s3")));
    auto fw = W.roots().fundamental_weights();
    // the stabilizer of varpi_1 is the parabolic subgroup on {2,3,4}
    auto st = W.stabilizer(fw[0]);
    CHECK(st.size() == 120);
    for (int w : st) CHECK(W.in_subgroup(w, {1, 2, 3}));
}
