#include "hecke/induce.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hecke {

namespace {

std::vector<Vec> weight_multiset(const HModule& U) {
    std::vector<Vec> out;
    if (!U.weights.empty()) {
        for (auto& e : U.weights)
            for (int m = 0; m < e.mult; ++m) out.push_back(e.weight);
    } else {
        out = U.basis_weights;
    }
    if (static_cast<int>(out.size()) != U.dim) throw std::invalid_argument("module has no complete weight catalogue");
    return out;
}

SparseMat embed_block(const SparseMat& A, int block, int dim_u, int n) {
    // columns of A (dim_u x dim_u) placed into rows block*dim_u.. of an n x dim_u matrix
    SparseMat r(n, A.cols);
    for (int k = 0; k < A.cols; ++k)
        for (auto& [i, x] : A.col[k]) r.col[k].emplace_back(block * dim_u + i, x);
    return r;
}

bool all_diagonal(const std::vector<SparseMat>& v) {
    return std::all_of(v.begin(), v.end(), [](const SparseMat& m) { return m.is_diagonal(); });
}

std::vector<SparseMat> transposed(const std::vector<SparseMat>& v) {
    std::vector<SparseMat> out;
    for (auto& m : v) out.push_back(m.transpose());
    return out;
}

// True when every B_j is upper triangular, given the transposes.
bool rows_upper(const std::vector<SparseMat>& BT) {
    for (auto& m : BT)
        for (int r = 0; r < m.cols; ++r)
            if (!m.col[r].empty() && m.col[r].front().first < r) return false;
    return true;
}

// Basis of {x : (B_j - lambda_j) x = 0 for all j}; BT holds the transposes (rows of B_j).
std::vector<SparseVec> joint_kernel(const std::vector<SparseMat>& BT, const Vec& lambda, int n) {
    bool upper = rows_upper(BT);
    SparseSolver s(n, upper ? SparseSolver::Pivot::Lowest : SparseSolver::Pivot::Sparsest);
    for (int q = 0; q < n; ++q) {
        int r = upper ? n - 1 - q : q;
        for (std::size_t j = 0; j < BT.size(); ++j) {
            SparseVec row = sv_axpy(BT[j].col[r], -lambda[j], SparseVec{{r, GoldenNum(1)}});
            if (!row.empty()) s.add_equation(row);
        }
    }
    return s.nullspace();
}

void add_rows(SparseSolver& s, std::map<int, SparseVec>& rows) {
    for (auto& [r, row] : rows) {
        std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
        SparseVec merged;
        for (auto& [k, x] : row) {
            if (!merged.empty() && merged.back().first == k) merged.back().second += x;
            else merged.emplace_back(k, x);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](auto& e) { return e.second.is_zero(); }),
                     merged.end());
        if (!merged.empty()) s.add_equation(merged);
    }
    rows.clear();
}

// Solutions X (dn x dm) of X A_g = B_g X for all g, where the Av are diagonal.
HomResult hom_diagonal_source(const std::vector<SparseMat>& At, const std::vector<SparseMat>& Av,
                              const std::vector<SparseMat>& Bt, const std::vector<SparseMat>& Bv, int dm, int dn,
                              bool want_basis) {
    auto BvT = transposed(Bv);
    std::map<Vec, int> lambda_id;
    std::vector<std::vector<SparseVec>> eig;
    std::vector<int> cls(dm);
    for (int k = 0; k < dm; ++k) {
        Vec lam(Av.size());
        for (std::size_t j = 0; j < Av.size(); ++j) lam[j] = Av[j].get(k, k);
        auto it = lambda_id.find(lam);
        if (it == lambda_id.end()) {
            it = lambda_id.emplace(lam, static_cast<int>(eig.size())).first;
            eig.push_back(joint_kernel(BvT, lam, dn));
        }
        cls[k] = it->second;
    }
    std::vector<int> offset(dm + 1, 0);
    for (int k = 0; k < dm; ++k) offset[k + 1] = offset[k] + static_cast<int>(eig[cls[k]].size());
    int nu = offset[dm];
    HomResult res;
    res.method = 'A';
    if (nu == 0) return res;
    SparseSolver s(nu);
    std::map<int, SparseVec> rows;
    for (std::size_t g = 0; g < At.size(); ++g) {
        // B_g applied to each eigen basis vector, per class
        std::vector<std::vector<SparseVec>> Beig(eig.size());
        for (std::size_t c = 0; c < eig.size(); ++c)
            for (auto& e : eig[c]) Beig[c].push_back(Bt[g].apply(e));
        for (int k = 0; k < dm; ++k) {
            for (auto& [l, a] : At[g].col[k]) {
                const auto& E = eig[cls[l]];
                for (std::size_t i = 0; i < E.size(); ++i)
                    for (auto& [r, x] : E[i]) rows[r].emplace_back(offset[l] + static_cast<int>(i), a * x);
            }
            const auto& BE = Beig[cls[k]];
            for (std::size_t i = 0; i < BE.size(); ++i)
                for (auto& [r, x] : BE[i]) rows[r].emplace_back(offset[k] + static_cast<int>(i), -x);
            add_rows(s, rows);
        }
    }
    res.dim = s.nullity();
    if (want_basis)
        for (auto& sol : s.nullspace()) {
            SparseMat X(dn, dm);
            for (int k = 0; k < dm; ++k) {
                SparseVec col;
                const auto& E = eig[cls[k]];
                for (auto& [u, x] : sol)
                    if (u >= offset[k] && u < offset[k + 1]) col = sv_axpy(col, x, E[u - offset[k]]);
                X.col[k] = col;
            }
            res.basis.push_back(std::move(X));
        }
    return res;
}

HomResult hom_general(const std::vector<SparseMat>& A, const std::vector<SparseMat>& B, int dm, int dn,
                      bool want_basis) {
    // unknown X(r, c) has index c * dn + r
    SparseSolver s(dm * dn);
    std::map<int, SparseVec> rows;
    for (std::size_t g = 0; g < A.size(); ++g) {
        auto BT = B[g].transpose();
        for (int c = 0; c < dm; ++c) {
            // (X A_g)(r, c) = sum_l X(r, l) A_g(l, c);  (B_g X)(r, c) = sum_l B_g(r, l) X(l, c)
            for (auto& [l, a] : A[g].col[c])
                for (int r = 0; r < dn; ++r) rows[r].emplace_back(l * dn + r, a);
            for (int r = 0; r < dn; ++r)
                for (auto& [l, b] : BT.col[r]) rows[r].emplace_back(c * dn + l, -b);
            add_rows(s, rows);
        }
    }
    HomResult res;
    res.method = 'G';
    res.dim = s.nullity();
    if (want_basis)
        for (auto& sol : s.nullspace()) {
            SparseMat X(dn, dm);
            for (auto& [u, x] : sol) X.col[u / dn].emplace_back(u % dn, x);
            res.basis.push_back(std::move(X));
        }
    return res;
}

}  // namespace

InducedModule induce(const WeylGroup& W, const std::vector<int>& I, const HModule& U) {
    const RootSystem& rs = W.roots();
    if (!(U.gram == rs.gram())) throw std::invalid_argument("induce: module lives on a different V");
    std::vector<int> sortedI = I, ug = U.gens;
    std::sort(sortedI.begin(), sortedI.end());
    std::sort(ug.begin(), ug.end());
    if (sortedI != ug) throw std::invalid_argument("induce: U is not an H_I-module for this I");
    InducedModule X;
    X.I = sortedI;
    X.base = U;
    X.reps = W.min_left_coset_reps(sortedI);
    int du = U.dim;
    int nb = static_cast<int>(X.reps.size());
    int n = nb * du;
    int r = rs.rank();
    std::vector<int> block(W.size(), -1);
    for (int b = 0; b < nb; ++b) block[X.reps[b]] = b;
    if (X.reps.empty() || X.reps[0] != W.identity()) throw std::logic_error("coset representatives must start at e");

    HModule& M = X.module;
    M.gram = rs.gram();
    M.c = U.c;
    M.dim = n;
    for (int i = 0; i < r; ++i) M.gens.push_back(i);
    M.t.assign(r, SparseMat(n, n));
    for (int i = 0; i < r; ++i)
        for (int b = 0; b < nb; ++b) {
            int w = X.reps[b];
            int s = block[W.lmul(i, w)];
            if (s >= 0) {
                for (int k = 0; k < du; ++k) M.t[i].col[b * du + k] = {{s * du + k, GoldenNum(1)}};
            } else {
                int beta = W.apply_root(W.inverse(w), i);
                if (beta >= rs.rank() || !U.has_gen(beta)) throw std::logic_error("Deodhar step left the parabolic");
                const SparseMat& tb = U.t_of(beta);
                for (int k = 0; k < du; ++k)
                    for (auto& [q, x] : tb.col[k]) M.t[i].col[b * du + k].emplace_back(b * du + q, x);
            }
        }

    // Y[b][j]: n x du matrix of u -> alpha_j (t_w (x) u)
    std::vector<std::vector<SparseMat>> Y(nb);
    for (int b = 0; b < nb; ++b) {
        int w = X.reps[b];
        Y[b].resize(r);
        if (b == 0) {
            for (int j = 0; j < r; ++j) Y[b][j] = embed_block(U.v[j], 0, du, n);
            continue;
        }
        int a = -1;
        for (int i = 0; i < r; ++i)
            if (W.left_descent(w, i)) {
                a = i;
                break;
            }
        int b1 = block[W.lmul(a, w)];
        if (b1 < 0 || b1 >= b) throw std::logic_error("descent left the coset representatives");
        for (int j = 0; j < r; ++j) {
            const GoldenNum& g = rs.gram()(a, j);
            SparseMat inner = Y[b1][j];
            if (!g.is_zero()) inner = inner - g * Y[b1][a];
            SparseMat out = M.t[a] * inner;
            if (!g.is_zero())
                for (int k = 0; k < du; ++k)
                    out.col[k] = sv_axpy(out.col[k], U.c * g, SparseVec{{b1 * du + k, GoldenNum(1)}});
            Y[b][j] = std::move(out);
        }
    }
    M.v.assign(r, SparseMat(n, n));
    for (int j = 0; j < r; ++j)
        for (int b = 0; b < nb; ++b)
            for (int k = 0; k < du; ++k) M.v[j].col[b * du + k] = std::move(Y[b][j].col[k]);
    for (int b = 0; b < nb; ++b)
        for (int k = 0; k < du; ++k)
            M.basis_tags.push_back(W.word_str(X.reps[b]) + "|" +
                                   (U.basis_tags.empty() ? std::to_string(k) : U.basis_tags[k]));
    M.weights = induced_weights(W, sortedI, U);
    return X;
}

int double_coset_rep(const WeylGroup& W, int x, const std::vector<int>& I, const std::vector<int>& J) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : I)
            if (W.left_descent(x, i)) {
                x = W.lmul(i, x);
                changed = true;
            }
        for (int j : J)
            if (W.right_descent(x, j)) {
                x = W.rmul(x, j);
                changed = true;
            }
    }
    return x;
}

std::vector<Vec> weights_of_layer(const WeylGroup& W, const std::vector<int>& I, const std::vector<int>& J,
                                  const HModule& U, int w) {
    int target = double_coset_rep(W, w, I, J);
    auto gammas = weight_multiset(U);
    std::vector<Vec> out;
    for (int y : W.min_left_coset_reps(J))
        if (double_coset_rep(W, y, I, J) == target)
            for (auto& g : gammas) out.push_back(W.apply(y, g));
    return out;
}

std::vector<WeightEntry> induced_weights(const WeylGroup& W, const std::vector<int>& I, const HModule& U) {
    auto gammas = weight_multiset(U);
    std::map<Vec, int> count;
    std::vector<Vec> order;
    for (int y : W.min_left_coset_reps(I))
        for (auto& g : gammas) {
            Vec x = W.apply(y, g);
            if (count[x]++ == 0) order.push_back(x);
        }
    std::vector<WeightEntry> out;
    for (auto& x : order) out.push_back({x, count[x], true});
    return out;
}

std::vector<SparseVec> eigenspace(const HModule& M, const Vec& lambda) {
    Vec d = M.gram.apply(lambda);
    return joint_kernel(transposed(M.v), d, M.dim);
}

int generalized_multiplicity(const HModule& M, const Vec& lambda) {
    Vec d = M.gram.apply(lambda);
    int n = M.dim, r = M.rank();
    std::vector<SparseMat> N;
    for (int j = 0; j < r; ++j) N.push_back(M.v[j] - SparseMat::scalar(n, d[j]));
    auto NT = transposed(N);
    bool upper = rows_upper(NT);
    std::vector<SparseVec> K;  // current K_k
    for (int step = 0; step < n; ++step) {
        // {x : N_j x in span K for all j}; unknowns x then y_j (|K| each)
        int m = static_cast<int>(K.size());
        SparseSolver s(n + r * m, upper ? SparseSolver::Pivot::Lowest : SparseSolver::Pivot::Sparsest);
        std::vector<SparseVec> KT(n);  // rows of the matrix with columns K
        for (int i = 0; i < m; ++i)
            for (auto& [row, x] : K[i]) KT[row].emplace_back(i, x);
        for (int q = 0; q < n; ++q) {
            int row = upper ? n - 1 - q : q;
            for (int j = 0; j < r; ++j) {
                SparseVec eq = NT[j].col[row];
                for (auto& [i, x] : KT[row]) eq.emplace_back(n + j * m + i, -x);
                if (!eq.empty()) s.add_equation(eq);
            }
        }
        std::vector<SparseVec> next;
        for (auto& sol : s.nullspace()) {
            SparseVec x;
            for (auto& e : sol)
                if (e.first < n) x.push_back(e);
            next.push_back(std::move(x));
        }
        if (next.size() == K.size()) break;
        K = std::move(next);
    }
    return static_cast<int>(K.size());
}

HomResult hom_space(const HModule& M, const HModule& N, bool want_basis) {
    if (!(M.gram == N.gram)) throw std::invalid_argument("hom_space: modules over different V");
    std::vector<int> gm = M.gens, gn = N.gens;
    std::sort(gm.begin(), gm.end());
    std::sort(gn.begin(), gn.end());
    if (gm != gn) throw std::invalid_argument("hom_space: modules over different algebras");
    std::vector<SparseMat> At, Bt;
    for (int i : gm) {
        At.push_back(M.t_of(i));
        Bt.push_back(N.t_of(i));
    }
    if (all_diagonal(M.v)) return hom_diagonal_source(At, M.v, Bt, N.v, M.dim, N.dim, want_basis);
    if (all_diagonal(N.v)) {
        // X A = B X  <=>  X^T B^T = A^T X^T
        HomResult r =
            hom_diagonal_source(transposed(Bt), transposed(N.v), transposed(At), transposed(M.v), N.dim, M.dim,
                                want_basis);
        for (auto& X : r.basis) X = X.transpose();
        r.method = 'B';
        return r;
    }
    std::vector<SparseMat> A = At, B = Bt;
    A.insert(A.end(), M.v.begin(), M.v.end());
    B.insert(B.end(), N.v.begin(), N.v.end());
    return hom_general(A, B, M.dim, N.dim, want_basis);
}

ThetaTwist theta_inverse(const WeylGroup& W, const std::vector<int>& I, const HModule& Y) {
    const RootSystem& rs = W.roots();
    ThetaTwist tw;
    tw.wo_I = W.mul(W.longest(), W.longest_in(I));
    int inv = W.inverse(tw.wo_I);
    for (int i : I) {
        int img = W.apply_root(tw.wo_I, i);
        if (img >= rs.rank()) throw std::logic_error("w_o^I does not map I to simple roots");
        tw.I_prime.push_back(img);
    }
    std::sort(tw.I_prime.begin(), tw.I_prime.end());
    HModule R = Y;
    R.gens = tw.I_prime;
    R.t.clear();
    for (int ip : tw.I_prime) R.t.push_back(Y.t_of(W.apply_root(inv, ip)));
    for (int j = 0; j < rs.rank(); ++j) {
        Vec e(rs.rank());
        e[j] = 1;
        R.v[j] = Y.v_of(W.apply(inv, e));
    }
    for (auto& w : R.basis_weights) w = W.apply(tw.wo_I, w);
    for (auto& e : R.weights) e.weight = W.apply(tw.wo_I, e.weight);
    tw.module = std::move(R);
    return tw;
}

AdjointnessReport second_adjointness_check(const WeylGroup& W, const HModule& X, const InducedModule& ind) {
    AdjointnessReport rep;
    rep.lhs = hom_space(X, ind.module).dim;
    auto tw = theta_inverse(W, ind.I, ind.base);
    rep.rhs = hom_space(restrict_to(X, tw.I_prime), tw.module).dim;
    return rep;
}

AdjointnessReport second_adjointness_check(const WeylGroup& W, const HModule& X, const std::vector<int>& I,
                                           const HModule& Y) {
    return second_adjointness_check(W, X, induce(W, I, Y));
}

MinimalInduction minimal_induction(const WeylGroup& W, const HModule& DS) {
    const RootSystem& rs = W.roots();
    if (DS.basis_weights.size() != static_cast<std::size_t>(DS.dim))
        throw std::invalid_argument("minimal_induction needs a calibrated module");
    if (ds_test(DS) != Temperedness::DiscreteSeries) throw std::invalid_argument("module is not a discrete series");
    auto ginv = *inverse(rs.gram());
    auto fw = rs.fundamental_weights();
    MinimalInduction best;
    int best_k = -1;
    for (int a = 0; a < rs.rank(); ++a) {
        const GoldenNum& nsq = ginv(a, a);
        for (int k = 0; k < DS.dim; ++k) {
            const GoldenNum& ga = DS.basis_weights[k][a];
            GoldenNum phi_sq = ga * ga / nsq;
            if (best_k < 0 || phi_sq < best.phi_sq) {
                best.phi_sq = phi_sq;
                best.alpha = a;
                best_k = k;
                best.minimizers = 1;
            } else if (phi_sq == best.phi_sq) {
                ++best.minimizers;
            }
        }
    }
    int a = best.alpha;
    for (int i = 0; i < rs.rank(); ++i)
        if (i != a) best.I.push_back(i);
    best.gamma = DS.basis_weights[best_k];
    best.omega = vec_scale(best.gamma[a] / ginv(a, a), fw[a]);
    for (auto& S : restrict_calibrated(DS, best.I)) {
        if (std::find(S.basis_weights.begin(), S.basis_weights.end(), best.gamma) == S.basis_weights.end()) continue;
        best.summand = twist_by(S, vec_scale(-1, best.omega));
        break;
    }
    best.summand_ds = true;
    for (auto& w : best.summand.basis_weights)
        for (int i = 0; i < rs.rank(); ++i) {
            if (i == a && !w[i].is_zero()) best.summand_ds = false;
            if (i != a && w[i].sign() >= 0) best.summand_ds = false;
        }
    return best;
}

bool splitting_check(const InducedModule& X) {
    HModule R = restrict_to(X.module, X.I);
    auto hom = hom_space(R, X.base, true);
    int du = X.base.dim;
    int d = static_cast<int>(hom.basis.size());
    // sum_i x_i (T_i restricted to block e) - s Id = 0 with s != 0
    SparseSolver s(d + 1);
    for (int r = 0; r < du; ++r)
        for (int c = 0; c < du; ++c) {
            SparseVec eq;
            for (int i = 0; i < d; ++i) {
                GoldenNum x = hom.basis[i].get(r, c);
                if (!x.is_zero()) eq.emplace_back(i, x);
            }
            if (r == c) eq.emplace_back(d, GoldenNum(-1));
            if (!eq.empty()) s.add_equation(eq);
        }
    for (auto& sol : s.nullspace())
        if (!sv_get(sol, d).is_zero()) return true;
    return false;
}

HModule calibrated_through(const WeylGroup& W, const Vec& gamma, const std::vector<int>& I, const GoldenNum& c) {
    const RootSystem& rs = W.roots();
    Character chi{gamma, c};
    auto listing = default_listing(rs, chi, I);
    std::vector<int> J;
    for (std::size_t k = 0; k < listing.size(); ++k)
        if (!rs.positive(listing[k])) J.push_back(static_cast<int>(k));
    auto reg = local_region(W, chi, listing, J, I);
    auto sk = skew_check(W, reg);
    if (!sk.skew) throw std::invalid_argument("region through gamma is not skew: " + sk.witness);
    return build_calibrated(W, reg);
}

}  // namespace hecke
