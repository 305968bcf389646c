#include "hecke/calmod.hpp"

#include "hecke/tables.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hecke {

bool HModule::has_gen(int i) const { return std::find(gens.begin(), gens.end(), i) != gens.end(); }

const SparseMat& HModule::t_of(int i) const {
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (gens[k] == i) return t[k];
    throw std::invalid_argument("module has no generator t_" + std::to_string(i + 1));
}

SparseMat HModule::v_of(const Vec& p) const {
    SparseMat r(dim, dim);
    for (int j = 0; j < rank(); ++j)
        if (!p[j].is_zero()) r = r + p[j] * v[j];
    return r;
}

namespace {

std::vector<int> all_gens(int n) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 0);
    return g;
}

bool in_span_of(const RootSystem& rs, int r, const std::vector<int>& gens) {
    for (int i = 0; i < rs.rank(); ++i)
        if (!rs.root(r)[i].is_zero() && std::find(gens.begin(), gens.end(), i) == gens.end()) return false;
    return true;
}

std::vector<GoldenNum> root_values(const RootSystem& rs, const Vec& chi) {
    Vec d = rs.dual(chi);
    std::vector<GoldenNum> out(rs.nroots());
    for (int r = 0; r < rs.nroots(); ++r) {
        GoldenNum s;
        for (int i = 0; i < rs.rank(); ++i) s += d[i] * rs.root(r)[i];
        out[r] = s;
    }
    return out;
}

std::string root_str(const RootSystem& rs, int r) { return vec_str(rs.root(r)); }

}  // namespace

std::vector<int> default_listing(const RootSystem& rs, const Character& chi, const std::vector<int>& gens) {
    std::vector<int> out;
    for (int r : p_set(rs, chi))
        if (in_span_of(rs, r, gens)) out.push_back(r);
    return out;
}

LocalRegion local_region(const WeylGroup& W, const Character& chi, const std::vector<int>& listing,
                         const std::vector<int>& j_positions, const std::vector<int>& gens) {
    const RootSystem& rs = W.roots();
    LocalRegion reg;
    reg.chi = chi;
    reg.gens = gens;
    auto vals = root_values(rs, chi.chi);
    for (int r : listing) {
        if (vals[r] != chi.c) throw std::invalid_argument("listed root " + root_str(rs, r) + " is not in P(chi)");
        if (!in_span_of(rs, r, gens)) throw std::invalid_argument("listed root lies outside the parabolic");
    }
    auto full = default_listing(rs, chi, gens);
    if (full.size() != listing.size()) throw std::invalid_argument("listing does not cover P(chi)");
    reg.listing = listing;
    reg.in_J.assign(listing.size(), false);
    for (int k : j_positions) {
        if (k < 0 || k >= static_cast<int>(listing.size())) throw std::out_of_range("J position out of range");
        reg.in_J[k] = true;
    }
    for (int r = 0; r < rs.npos(); ++r)
        if (vals[r].is_zero() && in_span_of(rs, r, gens)) reg.z.push_back(r);

    bool full_group = static_cast<int>(gens.size()) == rs.rank();
    for (int w = 0; w < W.size(); ++w) {
        if (!full_group && !W.in_subgroup(w, gens)) continue;
        bool ok = true;
        for (int z : reg.z)
            if (!rs.positive(W.apply_root(w, z))) {
                ok = false;
                break;
            }
        for (std::size_t k = 0; ok && k < listing.size(); ++k)
            if (rs.positive(W.apply_root(w, listing[k])) == reg.in_J[k]) ok = false;
        if (ok) reg.F.push_back(w);
    }
    if (reg.F.empty()) throw NotARegion("F is empty: (chi, J) is not a local region");
    for (std::size_t k = 0; k < listing.size(); ++k) reg.sign += reg.in_J[k] ? '-' : '+';
    // the defining conditions fix every listed sign, so agreement across F is automatic; recheck anyway
    for (int w : reg.F)
        for (std::size_t k = 0; k < listing.size(); ++k)
            if ((rs.positive(W.apply_root(w, listing[k])) ? '+' : '-') != reg.sign[k]) reg.sign_consistent = false;
    return reg;
}

LocalRegion local_region(const WeylGroup& W, const Character& chi, const std::vector<int>& listing,
                         const std::vector<int>& j_positions) {
    return local_region(W, chi, listing, j_positions, all_gens(W.rank()));
}

LocalRegion tabulated_region(const WeylGroup& W, int tag, const GoldenNum& c) {
    const RootSystem& rs = W.roots();
    Character chi = tables::representative(tag, c);
    std::vector<int> listing;
    for (auto& b : tables::character(tag).P) {
        int r = rs.find(b);
        if (r < 0) throw std::logic_error("tabulated root not found");
        listing.push_back(r);
    }
    return local_region(W, chi, listing, tables::j_positions(tag));
}

SkewReport skew_check(const WeylGroup& W, const LocalRegion& region) {
    const RootSystem& rs = W.roots();
    SkewReport rep;
    auto vals = root_values(rs, region.chi.chi);
    const GoldenNum& c = region.chi.c;
    const auto& gens = region.gens;

    std::vector<std::vector<int>> pair_roots;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) pair_roots.push_back(rs.parabolic_roots({gens[i], gens[j]}));

    for (int w : region.F) {
        int wi = W.inverse(w);
        auto wval = [&](int g) -> const GoldenNum& { return vals[W.apply_root(wi, g)]; };
        for (int g : gens)
            if (wval(g).is_zero()) {
                rep.skew = false;
                rep.witness = "w = " + W.word_str(w) + ": w chi vanishes on simple root alpha" + std::to_string(g + 1);
                break;
            }
        if (!rep.skew) break;
        for (std::size_t p = 0; p < pair_roots.size() && rep.skew; ++p) {
            bool has_zero = false;
            int pm = 0;
            for (int g : pair_roots[p]) {
                const GoldenNum& x = wval(g);
                if (x.is_zero()) has_zero = true;
                if (x == c || x == -c) ++pm;
            }
            if (has_zero && pm <= 2) {
                rep.skew = false;
                std::ostringstream os;
                os << "w = " << W.word_str(w) << ": rank 2 subsystem on simple roots {";
                bool first = true;
                for (int g : pair_roots[p])
                    if (g < rs.rank()) {
                        os << (first ? "" : ",") << "alpha" << g + 1;
                        first = false;
                    }
                os << "} has a zero of w chi but only " << pm << " roots with value +-c";
                rep.witness = os.str();
            }
        }
        if (!rep.skew) break;
    }

    // shortcut certificate from sign data
    std::vector<std::vector<int>> refl(rs.nroots(), std::vector<int>(rs.nroots(), -1));
    auto reflect = [&](int a, int b) {
        int& r = refl[a][b];
        if (r < 0) r = rs.find(rs.reflect(a, rs.root(b)));
        return r;
    };
    rep.certified = true;
    for (int w : region.F) {
        if (!rep.certified) break;
        std::vector<int> known;
        for (int r : region.listing) {
            known.push_back(W.apply_root(w, r));
            known.push_back(rs.neg(W.apply_root(w, r)));
        }
        std::vector<char> is_known(rs.nroots(), 0);
        for (int r : known) is_known[r] = 1;
        for (int z : region.z) {
            int a = W.apply_root(w, z);
            std::vector<int> flips;  // beta in known with s_a(beta) in known of opposite sign
            for (int b : known) {
                if (b == a || b == rs.neg(a)) continue;
                int bp = reflect(a, b);
                if (is_known[bp] && rs.positive(bp) != rs.positive(b)) flips.push_back(b);
            }
            bool indep = false;
            for (std::size_t i = 0; i < flips.size() && !indep; ++i)
                for (std::size_t j = i + 1; j < flips.size() && !indep; ++j) {
                    Mat m(3, rs.rank());
                    for (int k = 0; k < rs.rank(); ++k) {
                        m(0, k) = rs.root(flips[i])[k];
                        m(1, k) = rs.root(flips[j])[k];
                        m(2, k) = rs.root(a)[k];
                    }
                    indep = rank(m) == 3;
                }
            if (flips.empty() || !indep) {
                rep.certified = false;
                rep.certificate_gap = "w = " + W.word_str(w) + ", w(z) = " + root_str(rs, a) +
                                      (flips.empty() ? ": no sign-flipped pair" : ": no independent pair");
                break;
            }
        }
    }
    return rep;
}

HModule build_calibrated(const WeylGroup& W, const LocalRegion& region) {
    const RootSystem& rs = W.roots();
    auto vals = root_values(rs, region.chi.chi);
    const GoldenNum& c = region.chi.c;
    int n = static_cast<int>(region.F.size());
    std::vector<int> pos(W.size(), -1);
    for (int k = 0; k < n; ++k) pos[region.F[k]] = k;

    HModule M;
    M.gram = rs.gram();
    M.gens = region.gens;
    M.c = c;
    M.dim = n;
    M.t.assign(region.gens.size(), SparseMat(n, n));
    M.v.assign(rs.rank(), SparseMat(n, n));
    for (int k = 0; k < n; ++k) {
        int w = region.F[k];
        int wi = W.inverse(w);
        M.basis_tags.push_back(W.word_str(w));
        M.basis_weights.push_back(W.apply(w, region.chi.chi));
        for (int j = 0; j < rs.rank(); ++j) M.v[j].set(k, k, vals[W.apply_root(wi, j)]);
        for (std::size_t g = 0; g < region.gens.size(); ++g) {
            int i = region.gens[g];
            const GoldenNum& x = vals[W.apply_root(wi, i)];
            if (x.is_zero()) throw std::invalid_argument("region is not skew: w chi vanishes on a simple root");
            GoldenNum diag = c / x;
            GoldenNum off = diag + 1;
            M.t[g].set(k, k, diag);
            int s = pos[W.lmul(i, w)];
            if (s >= 0) M.t[g].set(s, k, off);
        }
        M.weights.push_back({M.basis_weights.back(), 1, false});
    }
    return M;
}

int coxeter_order(const Mat& gram, int i, int j) {
    if (i == j) return 1;
    const GoldenNum& g = gram(i, j);
    if (g.is_zero()) return 2;
    if (g == GoldenNum(-1)) return 3;
    if (g == -(gold_a() * 2)) return 5;
    throw std::invalid_argument("unsupported Gram entry " + g.str());
}

std::string RelationReport::summary() const {
    int bad = 0;
    for (auto& c : checks) bad += !c.ok;
    std::ostringstream os;
    os << checks.size() - bad << "/" << checks.size() << " relations hold";
    for (auto& c : checks)
        if (!c.ok) {
            os << "; " << c.name << " fails";
            if (c.witness)
                os << " at (" << c.witness->row << "," << c.witness->col << ") diff " << c.witness->value.str();
        }
    return os.str();
}

RelationReport verify_relations(const HModule& M) {
    RelationReport rep;
    SparseMat id = SparseMat::identity(M.dim);
    auto record = [&](std::string name, const SparseMat& lhs, const SparseMat& rhs) {
        RelationCheck ch;
        ch.name = std::move(name);
        ch.witness = first_difference(lhs, rhs);
        ch.ok = !ch.witness;
        rep.ok = rep.ok && ch.ok;
        rep.checks.push_back(std::move(ch));
    };
    auto nm = [](int i) { return std::to_string(i + 1); };
    for (std::size_t k = 0; k < M.gens.size(); ++k) {
        int i = M.gens[k];
        record("t" + nm(i) + "^2 = 1", M.t[k] * M.t[k], id);
    }
    for (std::size_t a = 0; a < M.gens.size(); ++a)
        for (std::size_t b = a + 1; b < M.gens.size(); ++b) {
            int i = M.gens[a], j = M.gens[b];
            int m = coxeter_order(M.gram, i, j);
            SparseMat p = M.t[a] * M.t[b];
            SparseMat acc = p;
            for (int e = 1; e < m; ++e) acc = acc * p;
            record("(t" + nm(i) + "t" + nm(j) + ")^" + std::to_string(m) + " = 1", acc, id);
        }
    for (int j = 0; j < M.rank(); ++j)
        for (int k = j + 1; k < M.rank(); ++k)
            record("v" + nm(j) + "v" + nm(k) + " = v" + nm(k) + "v" + nm(j), M.v[j] * M.v[k], M.v[k] * M.v[j]);
    for (std::size_t a = 0; a < M.gens.size(); ++a) {
        int i = M.gens[a];
        for (int j = 0; j < M.rank(); ++j) {
            const GoldenNum& g = M.gram(i, j);
            SparseMat sv = M.v[j] - g * M.v[i];  // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i> alpha_i
            record("t" + nm(i) + " v" + nm(j) + " - s" + nm(i) + "(v" + nm(j) + ") t" + nm(i) + " = c<v,a^>",
                   M.t[a] * M.v[j] - sv * M.t[a], (M.c * g) * id);
        }
    }
    return rep;
}

std::string to_string(Temperedness t) {
    switch (t) {
        case Temperedness::DiscreteSeries: return "discrete-series";
        case Temperedness::TemperedNotDS: return "tempered-not-ds";
        case Temperedness::NonTempered: return "non-tempered";
    }
    return "?";
}

Temperedness ds_test(const HModule& M) {
    std::vector<Vec> ws;
    for (auto& e : M.weights) ws.push_back(e.weight);
    if (ws.empty()) ws = M.basis_weights;
    if (ws.empty()) throw std::invalid_argument("ds_test needs a weight catalogue");
    bool strict = true;
    for (auto& g : ws)
        for (auto& x : g) {
            if (x.sign() > 0) return Temperedness::NonTempered;
            if (x.is_zero()) strict = false;
        }
    return strict ? Temperedness::DiscreteSeries : Temperedness::TemperedNotDS;
}

HModule restrict_to(const HModule& M, const std::vector<int>& I) {
    HModule R = M;
    R.gens = I;
    R.t.clear();
    for (int i : I) R.t.push_back(M.t_of(i));
    return R;
}

std::vector<HModule> restrict_calibrated(const HModule& M, const std::vector<int>& I) {
    std::vector<int> parent(M.dim);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i : I) {
        const SparseMat& t = M.t_of(i);
        for (int j = 0; j < M.dim; ++j)
            for (auto& [r, x] : t.col[j])
                if (r != j) parent[find(r)] = find(j);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of(M.dim, -1);
    for (int k = 0; k < M.dim; ++k) {
        int r = find(k);
        if (comp_of[r] < 0) {
            comp_of[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[comp_of[r]].push_back(k);
    }
    std::vector<HModule> out;
    for (auto& comp : comps) {
        int n = static_cast<int>(comp.size());
        std::vector<int> local(M.dim, -1);
        for (int k = 0; k < n; ++k) local[comp[k]] = k;
        auto sub = [&](const SparseMat& A) {
            SparseMat B(n, n);
            for (int k = 0; k < n; ++k)
                for (auto& [r, x] : A.col[comp[k]]) {
                    if (local[r] < 0) throw std::logic_error("tau-orbit is not invariant");
                    B.set(local[r], k, x);
                }
            return B;
        };
        HModule S;
        S.gram = M.gram;
        S.gens = I;
        S.c = M.c;
        S.dim = n;
        for (int i : I) S.t.push_back(sub(M.t_of(i)));
        for (auto& v : M.v) S.v.push_back(sub(v));
        for (int k : comp) {
            if (!M.basis_tags.empty()) S.basis_tags.push_back(M.basis_tags[k]);
            if (!M.basis_weights.empty()) {
                S.basis_weights.push_back(M.basis_weights[k]);
                S.weights.push_back({M.basis_weights[k], 1, false});
            }
        }
        out.push_back(std::move(S));
    }
    return out;
}

HModule im_twist(const HModule& M) {
    HModule R = M;
    for (auto& t : R.t) t = GoldenNum(-1) * t;
    for (auto& v : R.v) v = GoldenNum(-1) * v;
    for (auto& w : R.basis_weights) w = vec_scale(-1, w);
    for (auto& e : R.weights) e.weight = vec_scale(-1, e.weight);
    return R;
}

HModule star_dual(const WeylGroup& W, const HModule& M) {
    const RootSystem& rs = W.roots();
    if (!(M.gram == rs.gram()) || static_cast<int>(M.gens.size()) != rs.rank())
        throw std::invalid_argument("star_dual needs an H-module of the given Weyl group");
    int wo = W.longest();
    const auto& word = W.word(wo);
    SparseMat T = SparseMat::identity(M.dim), Tinv = SparseMat::identity(M.dim);
    for (int i : word) T = T * M.t_of(i);
    for (auto it = word.rbegin(); it != word.rend(); ++it) Tinv = Tinv * M.t_of(*it);
    HModule R = M;
    for (std::size_t k = 0; k < M.gens.size(); ++k) R.t[k] = M.t[k].transpose();
    for (int j = 0; j < rs.rank(); ++j) {
        Vec e(rs.rank());
        e[j] = 1;
        Vec img = W.apply(wo, e);
        SparseMat p = GoldenNum(-1) * (T * M.v_of(img) * Tinv);
        R.v[j] = p.transpose();
    }
    auto dual_weight = [&](const Vec& g) { return vec_scale(-1, W.apply(wo, g)); };
    for (auto& w : R.basis_weights) w = dual_weight(w);
    for (auto& e : R.weights) e.weight = dual_weight(e.weight);
    return R;
}

namespace {

HModule one_dim(const Mat& gram, const std::vector<int>& gens, const GoldenNum& c, int sgn) {
    int n = gram.rows;
    int k = static_cast<int>(gens.size());
    // gamma in span{alpha_i : i in gens} with <gamma, alpha_i> = sgn c
    Mat g(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) g(a, b) = gram(gens[a], gens[b]);
    Vec y = k ? *solve(g, Vec(k, c * sgn)) : Vec{};
    Vec gamma(n);
    for (int a = 0; a < k; ++a) gamma[gens[a]] = y[a];
    Vec d = gram.apply(gamma);
    HModule M;
    M.gram = gram;
    M.gens = gens;
    M.c = c;
    M.dim = 1;
    for (int a = 0; a < k; ++a) M.t.push_back(SparseMat::scalar(1, sgn));
    for (int j = 0; j < n; ++j) M.v.push_back(SparseMat::scalar(1, d[j]));
    M.basis_tags = {sgn < 0 ? "St" : "triv"};
    M.basis_weights = {gamma};
    M.weights = {{gamma, 1, false}};
    return M;
}

}  // namespace

HModule steinberg(const Mat& gram, const std::vector<int>& gens, const GoldenNum& c) {
    return one_dim(gram, gens, c, -1);
}

HModule trivial_module(const Mat& gram, const std::vector<int>& gens, const GoldenNum& c) {
    return one_dim(gram, gens, c, 1);
}

HModule twist_by(const HModule& M, const Vec& omega) {
    Vec d = M.gram.apply(omega);
    for (int i : M.gens)
        if (!d[i].is_zero()) throw std::invalid_argument("twist character does not vanish on the parabolic roots");
    HModule R = M;
    for (int j = 0; j < M.rank(); ++j)
        if (!d[j].is_zero()) R.v[j] = R.v[j] + SparseMat::scalar(M.dim, d[j]);
    for (auto& w : R.basis_weights) w = vec_add(w, omega);
    for (auto& e : R.weights) e.weight = vec_add(e.weight, omega);
    return R;
}

}  // namespace hecke
