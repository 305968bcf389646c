#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/induce.hpp"
#include "hecke/tables.hpp"
#include "hecke/wrep.hpp"

#include <sstream>

using namespace hecke;

namespace {

const WeylGroup& h4() {
    static WeylGroup W(RootSystem::h4());
    return W;
}

const GoldenNum kC = GoldenNum::frac(1, 2);

HModule calibrated(int tag) { return build_calibrated(h4(), tabulated_region(h4(), tag, kC)); }

// trivial, sign and the reflection representation, classes labelled by representative words
std::string partial_table(const WeylGroup& W) {
    std::ostringstream os;
    for (int k = 0; k < W.num_classes(); ++k)
        os << (k ? "," : "") << W.word_str(W.class_rep(k)) << "," << W.class_size(k);
    os << "\n";
    auto row = [&](const std::string& name, int dim, const ClassFunction& f) {
        os << name << "," << dim;
        for (auto& v : f.values) os << "," << v.str();
        os << "\n";
    };
    row("trivial", 1, trivial_character(W));
    row("sign", 1, sign_character(W));
    row("reflection", 4, wedge_character(W, 1));
    return os.str();
}

}  // namespace

TEST_CASE("Steinberg and trivial modules carry the sign and trivial characters") {
    const auto& W = h4();
    const Mat& g = W.roots().gram();
    auto st = steinberg(g, {0, 1, 2, 3}, kC);
    CHECK(module_character(W, st).values == sign_character(W).values);
    CHECK(module_character(W, trivial_module(g, {0, 1, 2, 3}, kC)).values == trivial_character(W).values);
    CHECK(sign_multiplicity(W, st) == 1);
    CHECK(trivial_multiplicity(W, st) == 0);
}

TEST_CASE("modular and exact characters agree") {
    const auto& W = h4();
    for (int tag : {3, 14, 15}) {
        auto M = calibrated(tag);
        CHECK(module_character(W, M).values == module_character_exact(W, M).values);
    }
}

TEST_CASE("reflection character") {
    const auto& W = h4();
    CHECK(reflection_character(W).values == wedge_character(W, 1).values);
    CHECK(wedge_character(W, 0).values == trivial_character(W).values);
    CHECK(wedge_character(W, 4).values == sign_character(W).values);
    CHECK(class_inner(W, reflection_character(W), reflection_character(W)) == GoldenNum(1));
}

TEST_CASE("Euler-Poincare pairing by hand for A1") {
    WeylGroup A1(RootSystem::build(RootType::A1));
    auto triv = trivial_character(A1), sgn = sign_character(A1);
    CHECK(ep_pairing(A1, triv, triv) == GoldenNum(1));
    CHECK(ep_pairing(A1, triv, sgn) == GoldenNum(-1));
    CHECK(ep_pairing(A1, sgn, sgn) == GoldenNum(1));
    CHECK(ep_pairing_wedge(A1, triv, sgn) == GoldenNum(-1));
}

TEST_CASE("both Euler-Poincare routes agree on discrete series") {
    const auto& W = h4();
    std::vector<ClassFunction> ch;
    for (int tag : {1, 2, 3, 14}) ch.push_back(module_character(W, calibrated(tag)));
    for (std::size_t i = 0; i < ch.size(); ++i)
        for (std::size_t j = 0; j < ch.size(); ++j) {
            auto e = ep_pairing(W, ch[i], ch[j]);
            CHECK(e == ep_pairing_wedge(W, ch[i], ch[j]));
            CHECK(e == GoldenNum(i == j ? 1 : 0));
        }
}

TEST_CASE("induced character matches the Frobenius formula") {
    const auto& W = h4();
    std::vector<int> I = {1, 2, 3};
    auto X = induce(W, I, steinberg(W.roots().gram(), I, kC));
    auto chi = module_character(W, X.module);
    auto reps = W.min_left_coset_reps(I);
    for (int k = 0; k < W.num_classes(); ++k) {
        int g = W.class_rep(k);
        long expect = 0;
        for (int x : reps) {
            int y = W.mul(W.mul(W.inverse(x), g), x);
            if (W.in_subgroup(y, I)) expect += W.length(y) % 2 ? -1 : 1;
        }
        CHECK(chi.values[k] == GoldenNum(expect));
    }
}

TEST_CASE("anti-sphericity in both modes") {
    const auto& W = h4();
    for (int tag : {1, 3, 14}) {
        auto M = calibrated(tag);
        bool a = antispherical_test(W, M, AntisphericalMode::Weight);
        CHECK(a == antispherical_test(W, M, AntisphericalMode::Character));
        CHECK(a == antispherical(W, M));
    }
    CHECK(antispherical(W, calibrated(1)));
    CHECK_FALSE(antispherical(W, calibrated(3)));
}

TEST_CASE("character table ingest and decomposition") {
    const auto& W = h4();
    auto t = ingest_char_table(W, partial_table(W));
    CHECK(t.rows.size() == 3);
    CHECK_FALSE(t.complete);
    auto parts = decompose(W, module_character(W, steinberg(W.roots().gram(), {0, 1, 2, 3}, kC)), t);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].name == "sign");
    CHECK(parts[0].mult == 1);
}

TEST_CASE("malformed character tables are rejected") {
    const auto& W = h4();
    std::string good = partial_table(W);
    // wrong class size
    std::string bad_size = good;
    bad_size.replace(bad_size.find(",1,"), 3, ",2,");
    CHECK_THROWS_AS(ingest_char_table(W, bad_size), TableError);
    // a duplicated row breaks orthonormality
    std::string dup = good + good.substr(good.find("sign,"), good.find("reflection,") - good.find("sign,"));
    CHECK_THROWS_AS(ingest_char_table(W, dup), TableError);
    CHECK_THROWS_AS(ingest_char_table(W, "e,1\n"), TableError);
    CHECK_THROWS_AS(load_char_table(W, "/nonexistent/table.csv"), TableError);
}
