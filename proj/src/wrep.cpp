#include "hecke/wrep.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hecke {

namespace {

int to_int(const GoldenNum& x, const char* what) {
    if (!x.is_rational() || x.p().get_den() != 1 || !x.p().get_num().fits_slong_p())
        throw InvariantViolation(std::string(what) + " is not an integer: " + x.str());
    return static_cast<int>(x.p().get_num().get_si());
}

ClassFunction per_class(const WeylGroup& W, const std::function<GoldenNum(int)>& f) {
    ClassFunction cf;
    for (int c = 0; c < W.num_classes(); ++c) cf.values.push_back(f(W.class_rep(c)));
    return cf;
}

// Sum of the principal i x i minors.
GoldenNum principal_minor_sum(const Mat& m, int i) {
    int n = m.rows;
    GoldenNum s;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != i) continue;
        std::vector<int> idx;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) idx.push_back(k);
        Mat sub(i, i);
        for (int r = 0; r < i; ++r)
            for (int c = 0; c < i; ++c) sub(r, c) = m(idx[r], idx[c]);
        s += i == 0 ? GoldenNum(1) : det(sub);
    }
    return s;
}

// Arithmetic modulo P = 2^61 - 1 under both embeddings sqrt5 -> +s, -s.
constexpr std::uint64_t P = (1ull << 61) - 1;

std::uint64_t mulm(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(x & P) + static_cast<std::uint64_t>(x >> 61);
    return r >= P ? r - P : r;
}
std::uint64_t addm(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= P ? r - P : r;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
std::uint64_t powm(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulm(a, a))
        if (e & 1) r = mulm(r, a);
    return r;
}
std::uint64_t invm(std::uint64_t a) { return powm(a, P - 2); }

const std::uint64_t kSqrt5 = [] {
    std::uint64_t s = powm(5, (P + 1) / 4);
    if (mulm(s, s) != 5) throw std::logic_error("5 is not a square mod P");
    return s;
}();

std::uint64_t rat_mod(const mpq_class& x) {
    std::uint64_t den = mpz_fdiv_ui(x.get_den_mpz_t(), P);
    if (den == 0) throw std::domain_error("denominator divisible by the modulus");
    return mulm(mpz_fdiv_ui(x.get_num_mpz_t(), P), invm(den));
}

struct ModPair {
    std::uint64_t plus = 0, minus = 0;
};

ModPair golden_mod(const GoldenNum& x) {
    std::uint64_t p = rat_mod(x.p()), q = mulm(rat_mod(x.q()), kSqrt5);
    return {addm(p, q), subm(p, q)};
}

long symmetric(std::uint64_t x) {
    if (x > P / 2) return -static_cast<long>(P - x);
    return static_cast<long>(x);
}

// Back from the two embeddings to A/2 + B/2 sqrt5 with small integers A, B.
GoldenNum reconstruct(const ModPair& v) {
    long a = symmetric(addm(v.plus, v.minus));
    long b = symmetric(mulm(subm(v.plus, v.minus), invm(kSqrt5)));
    const long bound = 1l << 40;
    if (a > bound || a < -bound || b > bound || b < -bound || ((a - b) % 2 != 0))
        throw InvariantViolation("trace is not an algebraic integer of Q(sqrt5)");
    return GoldenNum(mpq_class(a, 2), mpq_class(b, 2));
}

struct ModMat {
    std::vector<std::vector<std::pair<int, ModPair>>> col;
};

ModMat to_mod(const SparseMat& m) {
    ModMat r;
    r.col.resize(m.cols);
    for (int k = 0; k < m.cols; ++k)
        for (auto& [i, x] : m.col[k]) r.col[k].emplace_back(i, golden_mod(x));
    return r;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        auto b = cell.find_first_not_of(" \t\r");
        auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

GoldenNum element_trace(const WeylGroup& W, const HModule& M, int w) {
    const auto& word = W.word(w);
    for (int i : word)
        if (!M.has_gen(i)) throw std::invalid_argument("element outside the parabolic subgroup of the module");
    GoldenNum tr;
    for (int k = 0; k < M.dim; ++k) {
        SparseVec x{{k, GoldenNum(1)}};
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = M.t_of(*it).apply(x);
        tr += sv_get(x, k);
    }
    return tr;
}

ClassFunction module_character(const WeylGroup& W, const HModule& M) {
    std::map<int, ModMat> gen;
    for (int i : M.gens) gen[i] = to_mod(M.t_of(i));
    int n = M.dim;
    std::vector<ModPair> x(n), y(n);
    return per_class(W, [&](int w) {
        const auto& word = W.word(w);
        ModPair tr;
        for (int k = 0; k < n; ++k) {
            std::fill(x.begin(), x.end(), ModPair{});
            x[k] = {1, 1};
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                std::fill(y.begin(), y.end(), ModPair{});
                const auto& t = gen.at(*it);
                for (int j = 0; j < n; ++j) {
                    if (!x[j].plus && !x[j].minus) continue;
                    for (auto& [i, e] : t.col[j]) {
                        y[i].plus = addm(y[i].plus, mulm(e.plus, x[j].plus));
                        y[i].minus = addm(y[i].minus, mulm(e.minus, x[j].minus));
                    }
                }
                std::swap(x, y);
            }
            tr.plus = addm(tr.plus, x[k].plus);
            tr.minus = addm(tr.minus, x[k].minus);
        }
        return reconstruct(tr);
    });
}

ClassFunction module_character_exact(const WeylGroup& W, const HModule& M) {
    return per_class(W, [&](int w) { return element_trace(W, M, w); });
}

ClassFunction sign_character(const WeylGroup& W) {
    return per_class(W, [&](int w) { return GoldenNum(W.length(w) % 2 ? -1 : 1); });
}

ClassFunction trivial_character(const WeylGroup& W) {
    return per_class(W, [](int) { return GoldenNum(1); });
}

ClassFunction reflection_character(const WeylGroup& W) {
    return wedge_character(W, 1);
}

ClassFunction wedge_character(const WeylGroup& W, int i) {
    return per_class(W, [&](int w) { return principal_minor_sum(W.matrix(w), i); });
}

GoldenNum class_inner(const WeylGroup& W, const ClassFunction& f, const ClassFunction& g) {
    GoldenNum s;
    for (int c = 0; c < W.num_classes(); ++c) {
        int ci = W.class_of(W.inverse(W.class_rep(c)));
        s += GoldenNum(W.class_size(c)) * f.values[c] * g.values[ci];
    }
    return s / GoldenNum(W.size());
}

int sign_multiplicity(const WeylGroup& W, const HModule& M) {
    return to_int(class_inner(W, module_character(W, M), sign_character(W)), "sign multiplicity");
}

int trivial_multiplicity(const WeylGroup& W, const HModule& M) {
    return to_int(class_inner(W, module_character(W, M), trivial_character(W)), "trivial multiplicity");
}

int parabolic_sign_multiplicity(const WeylGroup& W, const HModule& M) {
    auto elems = W.parabolic_subgroup(M.gens);
    GoldenNum s;
    for (int w : elems) {
        GoldenNum t = element_trace(W, M, w);
        if (W.length(w) % 2) s -= t;
        else s += t;
    }
    return to_int(s / GoldenNum(static_cast<long>(elems.size())), "sign multiplicity");
}

GoldenNum ep_pairing(const WeylGroup& W, const ClassFunction& m, const ClassFunction& n) {
    int r = W.rank();
    ClassFunction md;
    for (int c = 0; c < W.num_classes(); ++c) {
        Mat a = Mat::identity(r) - W.matrix(W.class_rep(c));
        md.values.push_back(det(a) * m.values[c]);
    }
    return class_inner(W, md, n);
}

GoldenNum ep_pairing(const WeylGroup& W, const HModule& M, const HModule& N) {
    return ep_pairing(W, module_character(W, M), module_character(W, N));
}

GoldenNum ep_pairing_wedge(const WeylGroup& W, const ClassFunction& m, const ClassFunction& n) {
    GoldenNum s;
    for (int i = 0; i <= W.rank(); ++i) {
        ClassFunction wi = wedge_character(W, i), prod;
        for (int c = 0; c < W.num_classes(); ++c) prod.values.push_back(m.values[c] * wi.values[c]);
        int h = to_int(class_inner(W, prod, n), "Hom_W dimension");
        s += GoldenNum(i % 2 ? -h : h);
    }
    return s;
}

bool antispherical_test(const WeylGroup& W, const HModule& M, AntisphericalMode mode) {
    if (mode == AntisphericalMode::Character) return sign_multiplicity(W, M) >= 1;
    const RootSystem& rs = W.roots();
    if (!M.basis_weights.empty()) {
        for (auto& w : M.basis_weights)
            if (is_antidominant(rs, w)) return true;
        return false;
    }
    for (auto& e : M.weights)
        if (is_antidominant(rs, e.weight)) return true;
    return false;
}

bool antispherical(const WeylGroup& W, const HModule& M) {
    bool a = antispherical_test(W, M, AntisphericalMode::Weight);
    bool b = antispherical_test(W, M, AntisphericalMode::Character);
    if (a != b)
        throw InvariantViolation(std::string("anti-sphericity: weight mode says ") + (a ? "yes" : "no") +
                                 ", character mode says " + (b ? "yes" : "no"));
    return a;
}

CharTable ingest_char_table(const WeylGroup& W, const std::string& csv_text) {
    CharTable t;
    std::istringstream is(csv_text);
    std::string line;
    bool header = true;
    int nc = W.num_classes();
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_csv(line);
        if (header) {
            if (cells.size() % 2) throw TableError("header must hold class_label,class_size pairs");
            for (std::size_t k = 0; k < cells.size(); k += 2) {
                t.class_labels.push_back(cells[k]);
                try {
                    t.class_sizes.push_back(std::stol(cells[k + 1]));
                } catch (const std::exception&) {
                    throw TableError("bad class size '" + cells[k + 1] + "'");
                }
            }
            if (static_cast<int>(t.class_labels.size()) != nc)
                throw TableError("expected " + std::to_string(nc) + " classes, got " +
                                 std::to_string(t.class_labels.size()));
            std::vector<int> seen(nc, 0);
            for (std::size_t k = 0; k < t.class_labels.size(); ++k) {
                int w;
                try {
                    w = W.parse(t.class_labels[k]);
                } catch (const std::exception&) {
                    throw TableError("class label '" + t.class_labels[k] + "' is not a word");
                }
                int c = W.class_of(w);
                if (seen[c]++) throw TableError("class label '" + t.class_labels[k] + "' repeats a class");
                if (W.class_size(c) != t.class_sizes[k])
                    throw TableError("class '" + t.class_labels[k] + "' has size " + std::to_string(W.class_size(c)) +
                                     ", table says " + std::to_string(t.class_sizes[k]));
                t.class_map.push_back(c);
            }
            header = false;
            continue;
        }
        if (static_cast<int>(cells.size()) != nc + 2)
            throw TableError("row '" + (cells.empty() ? "" : cells[0]) + "' must have " + std::to_string(nc + 2) +
                             " cells");
        CharTable::Row row;
        row.name = cells[0];
        row.dim = std::stoi(cells[1]);
        row.chi.values.assign(nc, GoldenNum());
        for (int k = 0; k < nc; ++k) row.chi.values[t.class_map[k]] = GoldenNum::parse(cells[k + 2]);
        if (row.chi.values[W.class_of(W.identity())] != GoldenNum(row.dim))
            throw TableError("row " + row.name + ": value at the identity differs from dim");
        t.rows.push_back(std::move(row));
    }
    if (header) throw TableError("empty table");
    long sq = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        sq += static_cast<long>(t.rows[i].dim) * t.rows[i].dim;
        for (std::size_t j = i; j < t.rows.size(); ++j) {
            GoldenNum ip = class_inner(W, t.rows[i].chi, t.rows[j].chi);
            if (ip != GoldenNum(i == j ? 1 : 0))
                throw TableError("rows " + t.rows[i].name + " and " + t.rows[j].name +
                                 " fail orthogonality: inner product " + ip.str());
        }
    }
    t.complete = sq == W.size() && static_cast<int>(t.rows.size()) == nc;
    return t;
}

CharTable load_char_table(const WeylGroup& W, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ingest_char_table(W, ss.str());
}

std::vector<Component> decompose(const WeylGroup& W, const ClassFunction& chi, const CharTable& table) {
    std::vector<Component> out;
    for (auto& row : table.rows) {
        int m = to_int(class_inner(W, chi, row.chi), "multiplicity");
        if (m < 0) throw InvariantViolation("negative multiplicity of " + row.name);
        if (m > 0) out.push_back({row.name, row.dim, m});
    }
    return out;
}

}  // namespace hecke
