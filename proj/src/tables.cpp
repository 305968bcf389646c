#include "hecke/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace hecke::tables {

namespace {

std::vector<Vec> vecs(std::initializer_list<const char*> xs) {
    std::vector<Vec> out;
    for (const char* x : xs) out.push_back(parse_vec(x));
    return out;
}

std::vector<Vec> ambient(std::initializer_list<const char*> xs) {
    static const RootSystem rs = RootSystem::h4();
    std::vector<Vec> out;
    for (const char* x : xs) out.push_back(rs.from_ambient(parse_vec(x)));
    return out;
}

Vec add(const Vec& x, const char* y) { return vec_add(x, parse_vec(y)); }

std::vector<Vec> chi16_listing() {
    Vec b1 = parse_vec("[-1,-1,-(2a+1),-(2a+1)]");
    Vec b5 = parse_vec("[-2a,-2a,-2a,-2a]");
    return {b1, add(b1, "[0,0,0,1]"), add(b1, "[1,0,0,0]"), add(b1, "[1,0,0,1]"),
            b5, add(b5, "[0,0,0,2b]"), add(b5, "[2a,0,0,0]"), add(b5, "[2a,0,0,2b]")};
}

std::vector<Vec> chi17_listing() {
    Vec b1 = parse_vec("[-2a,-(2a+1),-(2a+1),-(2a+1)]");
    Vec b7 = add(b1, "[2b,2a,0,0]");
    Vec b9 = add(b1, "[2a,1,0,0]");
    Vec b11 = add(b1, "[2a,2a,0,0]");
    return {b1,
            add(b1, "[0,0,0,1]"),
            add(b1, "[2b,0,0,0]"),
            add(b1, "[2b,0,0,1]"),
            add(b1, "[0,1,0,0]"),
            add(b1, "[0,1,0,1]"),
            b7,
            add(b7, "[0,0,0,1]"),
            b9,
            add(b9, "[0,0,0,1]"),
            b11,
            add(b11, "[0,0,0,1]")};
}

std::vector<CharData> build() {
    const char* e1 = "[0,1,1,2a]";
    const char* e2 = "[0,2a,2a+1,2a]";
    const char* e3 = "[0,0,2a,2a]";
    std::vector<CharData> t(17);
    auto set = [&](int tag, std::vector<Vec> P, std::string sign, int dim, std::vector<Vec> Z = {},
                   std::vector<std::string> words = {}) {
        CharData& d = t[tag - 1];
        d.tag = tag;
        d.P = std::move(P);
        d.sign = std::move(sign);
        d.dim = dim;
        d.Z = std::move(Z);
        d.region_words = std::move(words);
    };
    set(1, vecs({"[1,0,0,0]", "[0,1,0,0]", "[0,0,1,0]", "[0,0,0,1]"}), "----", 1, {}, {"w_o"});
    set(2, vecs({"[1,1,0,0]", "[0,1,1,0]", "[0,0,1,2a]", "[0,0,2a,1]"}), "----", 14);
    set(3, vecs({"[1,0,0,0]", "[0,1,1,0]", "[0,0,1,2a]", "[0,0,2a,1]"}), "---+", 4);
    set(4, vecs({"[1,0,0,0]", "[0,1,0,0]", "[0,0,1,2a]", "[0,0,2a,1]"}), "----", 5);
    set(5, vecs({"[1,1,1,0]", e1, "[0,2a,2a,1]", e3}), "----", 55);
    set(6, vecs({"[1,1,0,0]", e1, "[0,2a,2a,1]", e3}), "-+--", 20);
    set(7, vecs({"[1,0,0,0]", e1, "[0,2a,2a,1]", e3}), "----", 30);
    set(8, vecs({"[1,1,1,2a]", "[0,2a,2a,2a]", "[2a,2a,2a,1]", "[0,1,2a+1,2a]"}), "----", 115);
    set(9, vecs({"[2a,2a,2a,2a]", "[1,1,2a+1,2a]", "[0,1,2a+1,2a+1]", e2}), "----", 240);
    set(10, vecs({"[2a,2a,2a,1]", "[0,1,2a+1,2a+1]", e2, "[1,1,2a+1,2a]"}), "---+", 86);
    set(11, vecs({"[2a,2a,2a+1,2a]", "[1,2a+1,2a+1,2a]", "[1,1,2a+1,2a+1]", "[0,2a,4a,2a+1]"}), "+---", 284);
    set(12, vecs({"[2a,2a+1,2a+1,2a]", "[2a,2a,2a+1,2a+1]", "[1,2a+1,2a+1,2a+1]", "[0,2a,4a,2a+1]"}), "----",
        409);
    set(13,
        ambient({"[0,1,0,0]", "[a,1/2,b,0]", "[-a,0,1/2,b]", "[0,-1/2,a,b]", "[-1/2,-1/2,-1/2,1/2]",
                 "[0,-a,-b,1/2]"}),
        "---+-+", 81, vecs({"[0,0,0,1]"}),
        {"s3s4s3s4s2s3s1w_o", "s1s2s3s4s3s4s1s2s3s4s1s2s3s4s2s3s4s1s2s3s2s1w_o"});
    set(14,
        ambient({"[-b,a,1/2,0]", "[1/2,b,a,0]", "[b,a,-1/2,0]", "[a,1/2,-b,0]", "[-a,0,-1/2,b]",
                 "[1/2,-a,0,b]"}),
        "-+-+--", 10, vecs({"[0,0,0,1]"}), {"s1s2s3s4s1s2s3s4s2s3s4w_o"});
    set(15,
        ambient({"[-1/2,-a,0,b]", "[0,-1/2,-a,b]", "[1/2,-b,a,0]", "[1,0,0,0]", "[-1/2,b,a,0]",
                 "[b,a,-1/2,0]"}),
        "-+-+--", 9, vecs({"[0,1,0,0]"}), {"s1s2s3s4s3s4s2s3s4s1s2w_o"});
    set(16, chi16_listing(), "---+---+", 35, vecs({"[1,0,0,0]", "[0,0,0,1]"}), {"s3s4s3s4s2s3"});
    set(17, chi17_listing(), "-------+-+++", 35, vecs({"[1,0,0,0]", "[0,1,0,0]", "[0,0,0,1]", "[1,1,0,0]"}),
        {"s3s4s3s4s1s2s3s4s3"});
    return t;
}

// coefficients of chi_j in the basis beta_j^1..beta_j^4 (c = 1/2)
const char* const kRegularCoeffs[12][4] = {
    {"17a+6", "34a+23/2", "51a+33/2", "42a+13"},
    {"7a+3", "8a+2", "7a+9/2", "2a+5/2"},
    {"9a+3", "18a+11/2", "15a+6", "-(6a+1/2)"},
    {"10a+4", "20a+15/2", "4a+7/2", "14a+6"},
    {"5a+2", "5", "-5a+9/2", "7/2"},
    {"7a+1", "-7a+9/2", "-3a+7", "3a+11/2"},
    {"5a+3", "-5a+11/2", "15/2", "4"},
    {"-14a+13", "-10a+9", "-20a+35/2", "-4a+11/2"},
    {"a+1", "1/4", "-a+3/2", "3/2"},
    {"-7a+8", "-2a+7/2", "-7a+13/2", "-8a+6"},
    {"-18a+29/2", "6a-7/2", "-15a+27/2", "-9a+15/2"},
    {"-51a+42", "-17a+29/2", "-42a+34", "-34a+57/2"},
};

Vec combo(const std::vector<Vec>& basis, const std::vector<std::pair<int, GoldenNum>>& terms) {
    Vec out(4);
    for (auto& [k, s] : terms) out = vec_add(out, vec_scale(s, basis[k]));
    return out;
}

// Solves chi(beta) = c on the listed P and chi(z) = 0 on Z (all equations at once).
Vec solve_listing(const CharData& d, const GoldenNum& c) {
    static const RootSystem rs = RootSystem::h4();
    std::vector<std::pair<Vec, GoldenNum>> eqs;
    for (auto& b : d.P) eqs.emplace_back(rs.dual(b), c);
    for (auto& z : d.Z) eqs.emplace_back(rs.dual(z), GoldenNum());
    Mat m(static_cast<int>(eqs.size()), 5);
    for (int r = 0; r < m.rows; ++r) {
        for (int j = 0; j < 4; ++j) m(r, j) = eqs[r].first[j];
        m(r, 4) = -eqs[r].second;
    }
    auto ns = nullspace(m);
    if (ns.size() != 1 || ns[0][4].is_zero()) throw std::logic_error("listing does not determine a unique character");
    Vec x(4);
    for (int j = 0; j < 4; ++j) x[j] = ns[0][j] / ns[0][4];
    return x;
}

}  // namespace

const std::vector<CharData>& characters() {
    static const std::vector<CharData> t = build();
    return t;
}

const CharData& character(int tag) {
    if (tag < 1 || tag > 17) throw std::out_of_range("character tag must be 1..17");
    return characters()[tag - 1];
}

std::vector<int> j_positions(int tag) {
    std::vector<int> out;
    const auto& s = character(tag).sign;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] == '-') out.push_back(i);
    return out;
}

Character representative(int tag, const GoldenNum& c) {
    const CharData& d = character(tag);
    static const RootSystem rs = RootSystem::h4();
    GoldenNum scale = c * 2;  // tabulated data is at c = 1/2
    Vec chi;
    if (tag <= 12) {
        Mat m(4, 4);
        for (int k = 0; k < 4; ++k) {
            Vec row = rs.dual(d.P[k]);
            for (int j = 0; j < 4; ++j) m(k, j) = row[j];
        }
        chi = *solve(m, Vec(4, GoldenNum::frac(1, 2)));
    } else if (tag == 13) {
        GoldenNum den = gold_a() * 6 + 2;
        chi = combo(d.P, {{0, GoldenNum(1) / den},
                          {1, parse_ab("11a+3") / den},
                          {2, parse_ab("3a+2") / den},
                          {4, parse_ab("8a+4") / den}});
    } else if (tag == 14) {
        chi = combo(d.P, {{0, parse_ab("20a+5") / parse_ab("8a+2")},
                          {2, parse_ab("10a+1") / parse_ab("8a+2")},
                          {4, parse_ab("4a+2") / parse_ab("4a+1")},
                          {5, parse_ab("13a+3") / parse_ab("4a+1")}});
    } else if (tag == 15) {
        chi = combo(d.P, {{0, parse_ab("34a+11") / parse_ab("4a+2")},
                          {2, parse_ab("18a+7") / parse_ab("4a+2")},
                          {4, parse_ab("3a+2") / parse_ab("2a+1")},
                          {5, parse_ab("21a+6") / parse_ab("2a+1")}});
    } else if (tag == 16) {
        chi = combo(d.P, {{1, 1}, {2, 1}, {5, GoldenNum::frac(3, 2)}, {6, GoldenNum::frac(3, 2)}});
    } else {
        GoldenNum den = gold_a() * 4 + 2;
        chi = combo(d.P, {{1, GoldenNum(2) / den},
                          {4, parse_ab("2a-1") / den},
                          {5, parse_ab("6a+1") / den},
                          {8, parse_ab("4a+4") / den}});
    }
    return Character{vec_scale(scale, chi), c};
}

Character representative_alt(int tag, const GoldenNum& c) {
    const CharData& d = character(tag);
    GoldenNum scale = c * 2;
    Vec chi;
    if (tag <= 12) {
        std::vector<std::pair<int, GoldenNum>> terms;
        for (int k = 0; k < 4; ++k) terms.emplace_back(k, parse_ab(kRegularCoeffs[tag - 1][k]));
        chi = combo(d.P, terms);
    } else {
        chi = solve_listing(d, GoldenNum::frac(1, 2));
    }
    return Character{vec_scale(scale, chi), c};
}

std::vector<GraphEdge> weight_graph(int tag) {
    auto parse = [](const char* s) {
        std::vector<GraphEdge> out;
        std::string str(s);
        std::size_t pos = 0;
        while (pos < str.size()) {
            std::size_t end = str.find(';', pos);
            if (end == std::string::npos) end = str.size();
            std::string item = str.substr(pos, end - pos);
            int f = 0, t = 0;
            char lab = 0;
            if (std::sscanf(item.c_str(), "%d %c %d", &f, &lab, &t) != 3) throw std::logic_error("bad edge " + item);
            out.push_back({f, t, lab == '_' ? -1 : lab - '1'});
            pos = end + 1;
        }
        return out;
    };
    switch (tag) {
        case 14:
            return parse("1 2 3;2 1 4;2 4 6;3 1 5;3 3 6;4 2 7;4 4 8;5 3 8;6 1 8;7 3 9;7 4 10;8 2 10");
        case 15:
            return parse("1 1 2;2 2 3;3 3 4;4 4 5;5 3 6;6 2 7;6 4 8;7 4 9;8 2 9");
        case 16:
            return parse(
                "1 2 3;1 1 4;1 4 5;2 3 5;2 1 6;3 1 7;3 3 8;3 4 10;4 2 9;4 4 11;5 2 10;5 1 11;6 3 11;6 2 12;"
                "7 3 13;7 2 14;7 4 15;8 1 13;9 1 14;9 4 16;11 2 16;12 3 17;10 1 15;14 4 18;15 2 18;16 1 18;"
                "16 3 19;17 2 19;17 4 20;18 3 21;19 1 21;19 4 23;20 3 22;20 2 23;21 4 27;22 2 24;22 4 26;"
                "23 _ 25;23 1 27;24 1 28;24 3 29;24 4 30;25 2 29;25 1 31;26 2 30;27 3 31;28 3 32;28 4 33;"
                "29 1 32;30 1 33;31 2 34;32 2 35;34 1 35");
        case 17:
            return parse(
                "1 2 3;1 4 4;2 3 4;2 2 5;3 4 6;4 2 6;5 3 7;5 1 8;6 3 9;7 2 9;7 1 10;7 4 11;8 3 10;9 4 13;"
                "10 4 14;11 3 12;11 2 13;11 1 14;12 2 15;12 1 17;12 4 18;13 3 16;14 3 17;15 1 19;15 3 20;"
                "15 4 22;16 2 20;17 2 21;17 4 23;18 2 22;18 1 23;19 3 24;19 2 25;19 4 26;20 1 24;21 1 25;"
                "21 4 27;22 1 26;23 2 27;25 4 28;26 2 28;27 1 28;27 3 29;28 3 30;29 1 30;29 4 31;30 4 33;"
                "31 3 32;31 1 33;32 1 34;33 3 34;34 2 35");
        default:
            throw std::invalid_argument("no weight graph tabulated for this character");
    }
}

int weight_graph_nodes(int tag) { return character(tag).dim; }

const std::vector<std::string>& springer_columns() {
    static const std::vector<std::string> c = {"1",  "3",  "4",  "15", "2",   "6",  "7",  "5",  "8",  "16'",
                                               "9",  "10", "14", "16", "13",  "17'", "17''", "17", "11", "12"};
    return c;
}

const std::vector<SpringerRow>& springer_table() {
    static const std::vector<SpringerRow> t = {
        {"sigma2", 1, {1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"sigma6", 4, {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0}},
        {"sigma4", 4, {0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1}},
        {"sigma14", 9, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1}},
        {"sigma12", 9, {0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1}},
        {"sigma21", 16, {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 1}},
        {"sigma19", 16, {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 2}},
        {"sigma28", 25, {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 2, 0, 0, 1, 2}},
        {"sigma32", 36, {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 0, 0, 0, 2, 1, 0, 2, 2}},
        {"sigma26", 24, {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"sigma24", 24, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"sigma33", 40, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1}},
        {"sigma30", 30, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0}},
        {"sigma7", 6, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0}},
        {"sigma16", 16, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0}},
        {"sigma29", 30, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {"sigma34", 48, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1}},
        {"sigma22", 18, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"sigma17", 16, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0}},
        {"sigma15", 10, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
        {"sigma25", 24, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
        {"sigma23", 24, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"sigma9", 8, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    };
    return t;
}

const std::vector<int>& antispherical_tags() {
    static const std::vector<int> t = {1, 2, 4, 5, 7, 8, 9, 12};
    return t;
}

namespace {

std::string conj_word(const std::string& x, const std::string& mid) {
    // x mid x^{-1}, x given as s-letters
    std::string inv;
    for (std::size_t i = x.size(); i >= 2; i -= 2) inv += x.substr(i - 2, 2);
    return x + mid + inv;
}

}  // namespace

InductionData chi17_induction() {
    static const RootSystem rs = RootSystem::h4();
    auto fw = rs.fundamental_weights();
    InductionData d;
    d.I = {0, 2, 3};
    d.chi_local = parse_vec("[-1/4,0,-(b+1),-(b+1)]");
    d.omega = vec_scale(parse_ab("-b+1/4"), fw[1]);
    std::string u = "s2s3s4s3s4s2s3s4s1s2s3s4s2s3s1";
    std::string v = "s2s3s4s1s2s3s4s2s3s4s1s2s3s4s1s2s3s4s1s2s3s1";
    d.stab_words = {"e", conj_word(u, "s2s4"), conj_word(v, "s2s4")};
    d.stab_lengths = {0, 32, 46};
    return d;
}

InductionData chi16_induction() {
    static const RootSystem rs = RootSystem::h4();
    auto fw = rs.fundamental_weights();
    InductionData d;
    d.I = {1, 2, 3};
    d.chi_local = parse_vec("[0,-(1+a),-(2a+3/2),-3a]");
    d.omega = vec_scale(-gold_b(), fw[0]);
    d.stab_words = {"e", conj_word("s1s2s3s4s3s4s2s3s4s1s2s3", "s2s4")};
    return d;
}

std::vector<Vec> u2_weights() {
    std::vector<Vec> out;
    for (auto& v : vecs({"[4a,8a+3,12a+5,12a+2]", "[4a,8a+3,12a+5,10a+4]", "[4a,8a+3,14a+3,10a+4]",
                         "[4a,10a,14a+3,10a+4]"}))
        out.push_back(vec_scale(GoldenNum::frac(-1, 2), v));
    return out;
}

std::vector<std::string> chi16_full_stabilizer() {
    return {"s3s4s1s2s3s4s2s3s1", "s1s2s3s4s3s4s1s2s3s4s1s2s3s4s2s3s4s1s2s3s4s3s1s2s1",
            "s1s2s3s4s3s4s2s3s4s1s2s3s4s2s3s4s2s3s4s1s2s3s4s3s2s1"};
}

std::string chi17_w3w2inv() { return "s3s4s2s3s4s1s2s3s4s2s3s4s2s3s4s1s2s3s4s3s2s1"; }

std::vector<Vec> chi17_wstar_images() {
    auto neg = [](const char* s) { return vec_scale(-1, parse_vec(s)); };
    return {neg("[4a,6a+1,8a+2,6a+2]"), neg("[2a,2a,2a+1,2a]"), neg("[2a+1,4a+1,6a+1,4a+2]"),
            neg("[1,0,0,0]"),           neg("[2a,4a+1,6a+2,4a+2]"), neg("[0,0,1,0]"),
            neg("[0,2a,4a,2a+1]"),      parse_vec("[2a,2a+1,2a+1,2a+1]"), neg("[0,0,0,1]"),
            parse_vec("[2a,4a+1,6a+1,4a+1]"), parse_vec("[1,1,1,0]"), parse_vec("[2a+1,4a+2,6a+2,4a+2]")};
}

std::vector<Vec> chi17_wstar_z_images() {
    return vecs({"[1,2a+1,4a+1,2a+1]", "[2a,2a,2a,2a]", "[2a,4a+1,6a+1,4a+2]", "[2a+1,4a+1,6a+1,4a+1]"});
}

std::vector<Vec> chi16_wstar_images() {
    auto neg = [](const char* s) { return vec_scale(-1, parse_vec(s)); };
    return {neg("[2a+1,4a+1,6a+2,6a+1]"), neg("[0,0,2a,2a]"), neg("[2a,4a,4a+1,4a+1]"), parse_vec("[1,1,1,0]"),
            neg("[2a,2a+1,4a+1,2a+1]"),  neg("[0,0,1,0]"),   neg("[0,1,0,0]"),         parse_vec("[2a,2a,4a,2a+1]")};
}

std::vector<Vec> chi16_wstar_z_images() { return vecs({"[1,1,2a+1,2a]", "[2a+1,4a+1,4a+2,4a+1]"}); }

}  // namespace hecke::tables
