#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/induce.hpp"
#include "hecke/tables.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace hecke;

namespace {

const WeylGroup& h4() {
    static WeylGroup W(RootSystem::h4());
    return W;
}

const GoldenNum kC = GoldenNum::frac(1, 2);

const HModule& chi14() {
    static HModule M = build_calibrated(h4(), tabulated_region(h4(), 14, kC));
    return M;
}

std::map<Vec, int> tally(const std::vector<Vec>& ws) {
    std::map<Vec, int> m;
    for (auto& w : ws) ++m[w];
    return m;
}

}  // namespace

TEST_CASE("induction from H3 is a module of the right size") {
    const auto& W = h4();
    std::vector<int> I = {1, 2, 3};
    auto U = restrict_calibrated(chi14(), I).front();
    auto X = induce(W, I, U);
    CHECK(X.reps.size() == 120);
    CHECK(X.module.dim == 120 * U.dim);
    CHECK(verify_relations(X.module).ok);
    int total = 0;
    for (auto& e : X.module.weights) total += e.mult;
    CHECK(total == X.module.dim);
    CHECK(splitting_check(X) == (hom_space(restrict_to(X.module, I), U).dim > 0));
}

TEST_CASE("inducing from every simple reflection changes nothing") {
    const auto& W = h4();
    auto X = induce(W, {0, 1, 2, 3}, chi14());
    CHECK(X.module.dim == chi14().dim);
    CHECK(X.module.t == chi14().t);
    CHECK(X.module.v == chi14().v);
}

TEST_CASE("Frobenius reciprocity") {
    const auto& W = h4();
    std::vector<int> I = {1, 2, 3};
    for (auto& U : restrict_calibrated(chi14(), I)) {
        auto X = induce(W, I, U);
        CHECK(hom_space(X.module, chi14()).dim == hom_space(U, restrict_to(chi14(), I)).dim);
    }
}

TEST_CASE("Hom of an irreducible calibrated module with itself") {
    auto r = hom_space(chi14(), chi14(), true);
    CHECK(r.dim == 1);
    REQUIRE(r.basis.size() == 1);
    CHECK(hom_space(chi14(), build_calibrated(h4(), tabulated_region(h4(), 15, kC))).dim == 0);
}

TEST_CASE("double coset representatives against brute force") {
    const auto& W = h4();
    std::vector<std::vector<int>> subsets = {{0}, {1, 2}, {0, 2}, {2, 3}};
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, W.size() - 1);
    for (auto& I : subsets)
        for (auto& J : subsets) {
            auto WI = W.parabolic_subgroup(I);
            auto WJ = W.parabolic_subgroup(J);
            for (int n = 0; n < 10; ++n) {
                int x = pick(rng);
                int best = x;
                for (int a : WI)
                    for (int b : WJ) {
                        int y = W.mul(W.mul(a, x), b);
                        if (W.length(y) < W.length(best)) best = y;
                    }
                CHECK(double_coset_rep(W, x, I, J) == best);
            }
        }
}

TEST_CASE("layers partition the induced weights") {
    const auto& W = h4();
    std::vector<int> J = {1, 2, 3}, I = {0, 1};
    auto U = restrict_calibrated(chi14(), J).front();
    std::vector<Vec> all;
    for (int w : W.min_double_coset_reps(I, J)) {
        auto layer = weights_of_layer(W, I, J, U, w);
        all.insert(all.end(), layer.begin(), layer.end());
    }
    std::map<Vec, int> expect;
    for (auto& e : induced_weights(W, J, U)) expect[e.weight] += e.mult;
    CHECK(tally(all) == expect);
}

TEST_CASE("calibrated weight spaces are one-dimensional") {
    const auto& M = chi14();
    for (int k = 0; k < M.dim; ++k) {
        CHECK(generalized_multiplicity(M, M.basis_weights[k]) == 1);
        CHECK(eigenspace(M, M.basis_weights[k]).size() == 1);
    }
    CHECK(generalized_multiplicity(M, vec_scale(3, M.basis_weights[0])) == 0);
}

TEST_CASE("theta twist is an involution when I is stable") {
    const auto& W = h4();
    for (std::vector<int> I : {std::vector<int>{0, 2, 3}, std::vector<int>{1, 2, 3}}) {
        auto Y = restrict_calibrated(chi14(), I).front();
        auto once = theta_inverse(W, I, Y);
        CHECK(once.I_prime == I);
        CHECK(verify_relations(once.module).ok);
        auto twice = theta_inverse(W, I, once.module);
        CHECK(twice.module.t == Y.t);
        CHECK(twice.module.v == Y.v);
    }
}
