#include "hecke/chars.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hecke {

std::vector<int> p_set(const RootSystem& rs, const Character& x) {
    std::vector<int> out;
    Vec d = rs.dual(x.chi);
    for (int r = 0; r < rs.nroots(); ++r) {
        GoldenNum v;
        for (int i = 0; i < rs.rank(); ++i) v += d[i] * rs.root(r)[i];
        if (v == x.c) out.push_back(r);
    }
    return out;
}

std::vector<int> z_set(const RootSystem& rs, const Character& x) {
    std::vector<int> out;
    Vec d = rs.dual(x.chi);
    for (int r = 0; r < rs.npos(); ++r) {
        GoldenNum v;
        for (int i = 0; i < rs.rank(); ++i) v += d[i] * rs.root(r)[i];
        if (v.is_zero()) out.push_back(r);
    }
    return out;
}

bool ho_check(const RootSystem& rs, const Character& x) {
    return p_set(rs, x).size() == 2 * z_set(rs, x).size() + static_cast<std::size_t>(rs.rank());
}

bool is_antidominant(const RootSystem& rs, const Vec& chi) {
    Vec d = rs.dual(chi);
    return std::all_of(d.begin(), d.end(), [](const GoldenNum& x) { return x.sign() <= 0; });
}

std::pair<Character, int> antidominant(const WeylGroup& W, const Character& x) {
    const RootSystem& rs = W.roots();
    Character y = x;
    int w = W.identity();
    while (true) {
        Vec d = rs.dual(y.chi);
        int j = -1;
        for (int i = 0; i < rs.rank(); ++i)
            if (d[i].sign() > 0) {
                j = i;
                break;
            }
        if (j < 0) break;
        y.chi = rs.reflect(j, y.chi);
        w = W.lmul(j, w);
    }
    return {y, w};
}

bool same_orbit(const WeylGroup& W, const Vec& x, const Vec& y) {
    return antidominant(W, Character{x, 1}).first.chi == antidominant(W, Character{y, 1}).first.chi;
}

namespace {

using ZVec = std::vector<ZPhi>;

// determinant of the k x k submatrix on rows r[], cols c[] (k <= 4)
ZPhi zdet(const ZPhi (*m)[4], const int* r, const int* c, int k) {
    if (k == 0) return ZPhi(1);
    if (k == 1) return m[r[0]][c[0]];
    if (k == 2) return m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]];
    ZPhi s;
    int cc[4];
    for (int j = 0; j < k; ++j) {
        int l2 = 0;
        for (int l = 0; l < k; ++l)
            if (l != j) cc[l2++] = c[l];
        ZPhi t = m[r[0]][c[j]] * zdet(m, r + 1, cc, k - 1);
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

std::int64_t gcd64(std::int64_t x, std::int64_t y) { return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y); }

}  // namespace

std::vector<ResidualPoint> enumerate_residual(const RootSystem& rs, const GoldenNum& c) {
    if (c.sign() <= 0) throw std::invalid_argument("parameter c must be positive");
    int n = rs.rank();
    if (n > 4) throw std::invalid_argument("rank above 4");
    int np = rs.npos();
    std::vector<ZVec> pos(np);
    for (int r = 0; r < np; ++r) pos[r] = rs.root_z(r);
    std::vector<ZVec> G(n, ZVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!ZPhi::from_golden(rs.gram()(i, j), G[i][j])) throw std::logic_error("Gram entry outside Z[phi]");

    std::map<std::vector<std::int64_t>, int> seen;
    std::vector<std::vector<std::int64_t>> keys;

    // Solve chi(beta_k) = 1 for a rank-many subset; with d = G chi, d = adj(N) 1 / det N.
    std::vector<int> sel(n);
    auto visit = [&]() {
        ZPhi N[4][4];
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) N[k][i] = pos[sel[k]][i];
        const int idx[4] = {0, 1, 2, 3};
        ZPhi D = zdet(N, idx, idx, n);
        if (D.is_zero()) return;
        ZVec y(n);
        for (int i = 0; i < n; ++i) {
            // y_i = sum_k adj(N)_{ik} = sum_k (-1)^{i+k} minor(k, i)
            ZPhi s;
            int cc[4], l = 0;
            for (int t = 0; t < n; ++t)
                if (t != i) cc[l++] = t;
            for (int k = 0; k < n; ++k) {
                int rr[4], q = 0;
                for (int t = 0; t < n; ++t)
                    if (t != k) rr[q++] = t;
                ZPhi m = zdet(N, rr, cc, n - 1);
                if ((i + k) % 2) s -= m;
                else s += m;
            }
            y[i] = s;
        }
        int pc = 0, zc = 0;
        for (int r = 0; r < np; ++r) {
            ZPhi v;
            for (int i = 0; i < n; ++i) v += pos[r][i] * y[i];
            if (v.is_zero()) ++zc;
            else if (v == D || v == -D) ++pc;
        }
        if (pc != 2 * zc + n) return;
        int sD = D.sign();
        while (true) {
            int j = -1;
            for (int i = 0; i < n; ++i)
                if (y[i].sign() * sD > 0) {
                    j = i;
                    break;
                }
            if (j < 0) break;
            ZPhi yj = y[j];
            for (int i = 0; i < n; ++i) y[i] -= G[i][j] * yj;
        }
        // canonical key of y / D = y conj(D) / N(D)
        ZPhi cd = D.conj();
        std::int64_t den = D.norm();
        std::vector<std::int64_t> key;
        for (int i = 0; i < n; ++i) {
            ZPhi t = y[i] * cd;
            key.push_back(t.m);
            key.push_back(t.n);
        }
        if (den < 0) {
            den = -den;
            for (auto& k : key) k = -k;
        }
        std::int64_t g = den;
        for (auto k : key) g = gcd64(g, k);
        for (auto& k : key) k /= g;
        key.push_back(den / g);
        if (!seen.count(key)) {
            seen[key] = static_cast<int>(keys.size());
            keys.push_back(key);
        }
    };
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == n) {
            visit();
            return;
        }
        for (int r = start; r < np; ++r) {
            sel[depth] = r;
            self(self, depth + 1, r + 1);
        }
    };
    if (n > 0) rec(rec, 0, 0);

    auto ginv = inverse(rs.gram());
    std::vector<ResidualPoint> out;
    for (auto& key : keys) {
        Vec d(n);
        GoldenNum den(mpq_class(key.back()));
        for (int i = 0; i < n; ++i)
            d[i] = ZPhi(key[2 * i], key[2 * i + 1]).to_golden() / den;
        ResidualPoint p;
        p.chi.c = c;
        p.chi.chi = vec_scale(c, ginv->apply(d));
        auto P = p_set(rs, p.chi);
        p.p_size = static_cast<int>(P.size());
        for (int r = 0; r < np; ++r) {
            GoldenNum v = p.chi.eval(rs, r);
            if (v == c || v == -c) p.p_pos.push_back(r);
        }
        p.z = z_set(rs, p.chi);
        p.norm_sq = rs.norm_sq(p.chi.chi);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const ResidualPoint& x, const ResidualPoint& y) {
        if (x.z.size() != y.z.size()) return x.z.size() < y.z.size();
        if (x.norm_sq != y.norm_sq) return x.norm_sq > y.norm_sq;
        return std::lexicographical_compare(x.chi.chi.begin(), x.chi.chi.end(), y.chi.chi.begin(),
                                            y.chi.chi.end());
    });
    return out;
}

namespace {

// Discrete series central characters of the irreducible pieces in local coordinates,
// each with its closed-form squared norm.
std::vector<std::pair<Vec, GoldenNum>> irreducible_table(const std::string& type, const GoldenNum& c) {
    const GoldenNum& a = gold_a();
    const GoldenNum& b = gold_b();
    GoldenNum h = GoldenNum::frac(1, 2);
    GoldenNum c2 = c * c;
    if (type == "A1") return {{{c * h}, c2 * h}};
    if (type == "A2") return {{{c, c}, c2 * 2}};
    if (type == "A3") return {{{c * GoldenNum::frac(3, 2), c, c * GoldenNum::frac(3, 2)}, c2 * 5}};
    if (type == "I2(5)") {
        GoldenNum k = (b + 1) * 2 * c;
        return {{{k, k}, c2 / (b * b * 2)}, {{c, c}, c2 / (a * a * 2)}};
    }
    if (type == "H3") {
        GoldenNum q = c / (a * 12 + 8);
        return {
            {{c * h * (a * 10 + 5), c * h * (a * 20 + 8), c * h * (a * 18 + 6)}, c2 * h * (a * 48 + 19)},
            {{c * (a * 2 + 2), c * (a * 4 + 3), c * a * 6}, c2 * 8},
            {{c * h * (-a * 2 + 5), c * h * (-a * 4 + 8), c * h * a * 6}, c2 * h * (-a * 48 + 43)},
            // as printed; this vector is not residual, see lowrank tests
            {{q * (a * 20 + 7), q * (a * 40 + 12), q * (a * 34 + 11)}, c2 * GoldenNum::frac(11, 2)},
        };
    }
    throw std::invalid_argument("no closed-form table for " + type);
}

}  // namespace

std::vector<LowRankEntry> lowrank_ds_table(RootType t, const GoldenNum& c) {
    std::vector<std::string> parts;
    switch (t) {
        case RootType::A1: parts = {"A1"}; break;
        case RootType::A2: parts = {"A2"}; break;
        case RootType::A3: parts = {"A3"}; break;
        case RootType::I2_5: parts = {"I2(5)"}; break;
        case RootType::H3: parts = {"H3"}; break;
        case RootType::A1xA1: parts = {"A1", "A1"}; break;
        case RootType::A2xA1: parts = {"A2", "A1"}; break;
        case RootType::I2_5xA1: parts = {"A1", "I2(5)"}; break;  // local order alpha1 | alpha3, alpha4
        case RootType::H4: throw std::invalid_argument("H4 has no closed-form low rank table");
    }
    std::vector<std::pair<Vec, GoldenNum>> acc{{Vec{}, GoldenNum()}};
    for (auto& p : parts) {
        std::vector<std::pair<Vec, GoldenNum>> next;
        for (auto& [x, nx] : acc)
            for (auto& [y, ny] : irreducible_table(p, c)) {
                Vec z = x;
                z.insert(z.end(), y.begin(), y.end());
                next.emplace_back(z, nx + ny);
            }
        acc = next;
    }
    std::vector<LowRankEntry> out;
    for (auto& [v, n] : acc) out.push_back({Character{v, c}, n});
    return out;
}

}  // namespace hecke
