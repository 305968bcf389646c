#include "hecke/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hecke {

namespace {

ZPhi zphi_of(const GoldenNum& x) {
    ZPhi z;
    if (!ZPhi::from_golden(x, z)) throw std::logic_error("root coordinate outside Z[phi]: " + x.str());
    return z;
}

Mat h4_gram() {
    Mat g(4, 4);
    for (int i = 0; i < 4; ++i) g(i, i) = 2;
    g(0, 1) = g(1, 0) = -1;
    g(1, 2) = g(2, 1) = -1;
    g(2, 3) = g(3, 2) = -(gold_a() * 2);
    return g;
}

std::vector<Vec> h4_ambient_simple() {
    const GoldenNum& a = gold_a();
    const GoldenNum& b = gold_b();
    GoldenNum h = GoldenNum::frac(1, 2);
    return {
        {-h, -a, 0, b},
        {h, b, -a, 0},
        {-a, h, b, 0},
        {a, -h, b, 0},
    };
}

GoldenNum coeff_sum(const Vec& v) {
    GoldenNum s;
    for (auto& x : v) s += x;
    return s;
}

}  // namespace

RootType parse_root_type(const std::string& s) {
    static const std::map<std::string, RootType> m = {
        {"A1", RootType::A1},       {"A2", RootType::A2},         {"A3", RootType::A3},
        {"I2(5)", RootType::I2_5},  {"I2_5", RootType::I2_5},     {"H3", RootType::H3},
        {"H4", RootType::H4},       {"A1xA1", RootType::A1xA1},   {"A2xA1", RootType::A2xA1},
        {"I2(5)xA1", RootType::I2_5xA1}, {"I2_5xA1", RootType::I2_5xA1},
    };
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown root system type: " + s);
    return it->second;
}

std::string root_type_name(RootType t) {
    switch (t) {
        case RootType::A1: return "A1";
        case RootType::A2: return "A2";
        case RootType::A3: return "A3";
        case RootType::I2_5: return "I2(5)";
        case RootType::H3: return "H3";
        case RootType::H4: return "H4";
        case RootType::A1xA1: return "A1xA1";
        case RootType::A2xA1: return "A2xA1";
        case RootType::I2_5xA1: return "I2(5)xA1";
    }
    return "?";
}

RootSystem RootSystem::h4() { return from_h4_subset({0, 1, 2, 3}); }

RootSystem RootSystem::build(RootType t) {
    RootSystem r;
    switch (t) {
        case RootType::A1: r = from_h4_subset({0}); break;
        case RootType::A2: r = from_h4_subset({0, 1}); break;
        case RootType::A3: r = from_h4_subset({0, 1, 2}); break;
        case RootType::I2_5: r = from_h4_subset({2, 3}); break;
        case RootType::H3: r = from_h4_subset({1, 2, 3}); break;
        case RootType::H4: return h4();
        case RootType::A1xA1: r = from_h4_subset({0, 2}); break;
        case RootType::A2xA1: r = from_h4_subset({0, 1, 3}); break;
        case RootType::I2_5xA1: r = from_h4_subset({0, 2, 3}); break;
    }
    r.label_ = root_type_name(t);
    return r;
}

RootSystem RootSystem::from_h4_subset(const std::vector<int>& I) {
    RootSystem r;
    Mat g4 = h4_gram();
    int n = static_cast<int>(I.size());
    r.rank_ = n;
    r.embed_ = I;
    r.gram_ = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.gram_(i, j) = g4(I[i], I[j]);
    r.label_ = n == 4 ? "H4" : "sub";
    r.close_roots();
    return r;
}

void RootSystem::close_roots() {
    int n = rank_;
    std::vector<Vec> found;
    std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> seen;
    auto key = [](const Vec& v) {
        std::vector<std::pair<std::int64_t, std::int64_t>> k;
        for (auto& x : v) {
            ZPhi z = zphi_of(x);
            k.emplace_back(z.m, z.n);
        }
        return k;
    };
    for (int i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = 1;
        found.push_back(e);
        seen.insert(key(e));
    }
    for (std::size_t k = 0; k < found.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            Vec v = found[k];
            GoldenNum p = gram_.apply(v)[i];
            v[i] -= p;
            if (seen.insert(key(v)).second) found.push_back(v);
        }
    }
    std::vector<Vec> pos;
    for (auto& v : found) {
        bool nonneg = std::all_of(v.begin(), v.end(), [](const GoldenNum& x) { return x.sign() >= 0; });
        if (nonneg) pos.push_back(v);
    }
    // simple roots keep indices 0..n-1, the rest follow by (coefficient sum, lex)
    std::stable_sort(pos.begin() + n, pos.end(), [](const Vec& x, const Vec& y) {
        GoldenNum sx = coeff_sum(x), sy = coeff_sum(y);
        if (sx != sy) return sx < sy;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    if (pos.size() * 2 != found.size()) throw std::logic_error("root closure is not symmetric");
    npos_ = static_cast<int>(pos.size());
    roots_ = pos;
    for (auto& v : pos) roots_.push_back(vec_scale(-1, v));
    roots_z_.clear();
    for (auto& v : roots_) {
        std::vector<ZPhi> z;
        for (auto& x : v) z.push_back(zphi_of(x));
        roots_z_.push_back(z);
    }
    sref_.assign(n, std::vector<int>(roots_.size()));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < nroots(); ++r) {
            int j = find(reflect(i, roots_[r]));
            if (j < 0) throw std::logic_error("reflection left the root set");
            sref_[i][r] = j;
        }
}

int RootSystem::find(const Vec& v) const {
    if (static_cast<int>(v.size()) != rank_) return -1;
    std::vector<ZPhi> z(rank_);
    for (int i = 0; i < rank_; ++i)
        if (!ZPhi::from_golden(v[i], z[i])) return -1;
    for (int r = 0; r < nroots(); ++r)
        if (roots_z_[r] == z) return r;
    return -1;
}

GoldenNum RootSystem::pair(const Vec& x, const Vec& y) const {
    Vec gy = gram_.apply(y);
    GoldenNum s;
    for (int i = 0; i < rank_; ++i) s += x[i] * gy[i];
    return s;
}

Vec RootSystem::reflect(int r, const Vec& v) const {
    return vec_sub(v, vec_scale(pair(v, roots_[r]), roots_[r]));
}

std::vector<Vec> RootSystem::fundamental_weights() const {
    auto inv = inverse(gram_);
    if (!inv) throw std::logic_error("singular Gram matrix");
    std::vector<Vec> w;
    for (int i = 0; i < rank_; ++i) {
        Vec e(rank_);
        e[i] = 1;
        w.push_back(inv->apply(e));
    }
    return w;
}

Vec RootSystem::to_ambient(const Vec& x) const {
    if (!has_ambient()) throw std::logic_error("ambient coordinates only exist for H4");
    auto s = h4_ambient_simple();
    Vec u(4);
    for (int i = 0; i < 4; ++i) u = vec_add(u, vec_scale(x[i], s[i]));
    return u;
}

Vec RootSystem::from_ambient(const Vec& u) const {
    if (!has_ambient()) throw std::logic_error("ambient coordinates only exist for H4");
    auto s = h4_ambient_simple();
    Mat m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(j, i) = s[i][j];
    auto x = solve(m, u);
    if (!x) throw std::logic_error("ambient basis is singular");
    return *x;
}

std::vector<Rank2Subsystem> RootSystem::rank2_subsystems() const {
    std::vector<Rank2Subsystem> out;
    std::set<std::vector<int>> seen;
    int n = rank_;
    // delta lies in span(b, g) iff every 3x3 minor of [b g delta] vanishes
    auto in_span = [&](int b, int g, int d) {
        const auto& x = roots_z_[b];
        const auto& y = roots_z_[g];
        const auto& z = roots_z_[d];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    ZPhi m = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                             x[k] * (y[i] * z[j] - y[j] * z[i]);
                    if (!m.is_zero()) return false;
                }
        return true;
    };
    for (int b = 0; b < npos_; ++b)
        for (int g = b + 1; g < npos_; ++g) {
            if (seen.count({b, g})) continue;
            std::vector<int> sub;
            for (int d = 0; d < npos_; ++d)
                if (in_span(b, g, d)) sub.push_back(d);
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (std::size_t j = i + 1; j < sub.size(); ++j) seen.insert({sub[i], sub[j]});
            Rank2Subsystem s;
            s.positive = sub;
            switch (sub.size()) {
                case 2: s.type = "A1xA1"; break;
                case 3: s.type = "A2"; break;
                case 5: s.type = "I2(5)"; break;
                default: throw std::logic_error("unexpected rank 2 subsystem size");
            }
            out.push_back(std::move(s));
        }
    return out;
}

std::vector<int> RootSystem::parabolic_roots(const std::vector<int>& I) const {
    std::vector<int> out;
    for (int r = 0; r < nroots(); ++r) {
        bool ok = true;
        for (int i = 0; i < rank_; ++i)
            if (!roots_[r][i].is_zero() && std::find(I.begin(), I.end(), i) == I.end()) ok = false;
        if (ok) out.push_back(r);
    }
    return out;
}

Vec parse_vec(const std::string& s) {
    std::size_t lo = s.find('['), hi = s.rfind(']');
    if (lo == std::string::npos || hi == std::string::npos || hi < lo)
        throw ParseError("expected [x1,...,xn]", 0);
    Vec v;
    std::string body = s.substr(lo + 1, hi - lo - 1);
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i < body.size() && body[i] == '(') ++depth;
        if (i < body.size() && body[i] == ')') --depth;
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
            try {
                v.push_back(parse_ab(body.substr(start, i - start)));
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad vector entry: ") + e.what(), lo + 1 + start + e.position());
            }
            start = i + 1;
        }
    }
    return v;
}

}  // namespace hecke
