#pragma once

#include "hecke/calmod.hpp"

#include <vector>

namespace hecke {

struct InducedModule {
    std::vector<int> I;
    HModule base;            // U, an H_I-module
    std::vector<int> reps;   // minimal representatives of W/W_I, block order
    HModule module;          // H (x)_{H_I} U with basis t_w (x) u_k, index block * dim U + k
};

// Induction from H_I to H. The t-action permutes blocks or acts inside a block by
// rho_U(t_beta); the v-action is pushed through t_w along the first-left-descent word.
InducedModule induce(const WeylGroup& W, const std::vector<int>& I, const HModule& U);

// Minimal representative of W_I x W_J.
int double_coset_rep(const WeylGroup& W, int x, const std::vector<int>& I, const std::vector<int>& J);
// Weights {y gamma : y in W^{J} cap W_I w W_J, gamma a weight of U} for U an H_J-module.
std::vector<Vec> weights_of_layer(const WeylGroup& W, const std::vector<int>& I, const std::vector<int>& J,
                                  const HModule& U, int w);
// Weight catalogue (with multiplicities) of Ind U assembled from all layers.
std::vector<WeightEntry> induced_weights(const WeylGroup& W, const std::vector<int>& I, const HModule& U);

// Dimension of the generalized weight space at lambda, from kernel ranks of (A - mu)^k for a
// generic combination A of the v-actions; k is capped at dim M.
int generalized_multiplicity(const HModule& M, const Vec& lambda);
// Joint eigenspace {m : alpha_j m = <lambda, alpha_j> m}, as columns.
std::vector<SparseVec> eigenspace(const HModule& M, const Vec& lambda);

struct HomResult {
    int dim = 0;
    std::vector<SparseMat> basis;  // dim N x dim M intertwiners
    char method = 'G';             // 'A' source diagonal, 'B' target diagonal, 'G' general
};
// Hom over the common algebra: generators t_alpha (alpha in gens) and all v_j.
HomResult hom_space(const HModule& M, const HModule& N, bool want_basis = false);

struct ThetaTwist {
    std::vector<int> I_prime;
    int wo_I = 0;  // w_o w_{o,I}
    HModule module;
};
// (theta^I)^{-1} Y: an H_{I'}-module on the space of the H_I-module Y.
ThetaTwist theta_inverse(const WeylGroup& W, const std::vector<int>& I, const HModule& Y);

struct AdjointnessReport {
    int lhs = 0, rhs = 0;
    bool ok() const { return lhs == rhs; }
};
// dim Hom_H(X, Ind_I Y) against dim Hom_{H_I'}(X, (theta^I)^{-1} Y).
AdjointnessReport second_adjointness_check(const WeylGroup& W, const HModule& X, const std::vector<int>& I,
                                           const HModule& Y);
AdjointnessReport second_adjointness_check(const WeylGroup& W, const HModule& X, const InducedModule& ind);

struct MinimalInduction {
    std::vector<int> I;
    int alpha = -1;       // the simple index outside I
    Vec gamma;            // minimizing weight
    GoldenNum phi_sq;     // Phi(I, gamma)^2
    Vec omega;            // projection of gamma onto the line of varpi_alpha
    HModule summand;      // H_I summand of DS through gamma, twisted by -omega
    bool summand_ds = false;
    int minimizers = 0;   // number of (I, weight) pairs attaining the minimum
};
MinimalInduction minimal_induction(const WeylGroup& W, const HModule& DS);

// Does the embedding U -> Ind U, u -> 1 (x) u, split over H_I?
bool splitting_check(const InducedModule& X);

// Calibrated H_I-module through gamma: J = P_I(gamma) cap R^-, so the identity lies in F.
HModule calibrated_through(const WeylGroup& W, const Vec& gamma, const std::vector<int>& I,
                           const GoldenNum& c = GoldenNum::frac(1, 2));

}  // namespace hecke
