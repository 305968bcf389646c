#pragma once

#include "hecke/chars.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct WeightEntry {
    Vec weight;  // simple-root coordinates
    int mult = 1;
    bool generalized = false;
};

// A finite-dimensional module over H (gens = all simple indices) or over a parabolic
// subalgebra H_I = H~_I (x) S(V) (gens = I). V always has the full rank of gram.
struct HModule {
    Mat gram;
    std::vector<int> gens;
    GoldenNum c = GoldenNum::frac(1, 2);
    int dim = 0;
    std::vector<SparseMat> t;  // t[k] is the action of t_{alpha_{gens[k]}}
    std::vector<SparseMat> v;  // v[j] is the action of alpha_j
    std::vector<std::string> basis_tags;
    std::vector<Vec> basis_weights;  // filled for calibrated modules
    std::vector<WeightEntry> weights;

    int rank() const { return gram.rows; }
    bool has_gen(int i) const;
    const SparseMat& t_of(int i) const;
    // Action of sum_j p_j alpha_j.
    SparseMat v_of(const Vec& p) const;
};

class NotARegion : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LocalRegion {
    Character chi;
    std::vector<int> gens;     // simple indices; the region lives in W_gens
    std::vector<int> listing;  // root indices of P(chi) cap R_gens, in listing order
    std::vector<bool> in_J;    // per listing entry
    std::vector<int> z;        // Z(chi) cap R_gens
    std::vector<int> F;        // elements of W, increasing index
    std::string sign;          // sign of w(beta) per listing entry, w in F
    bool sign_consistent = true;
};

// P(chi) cap R_I in root-index order, the listing used when none is printed.
std::vector<int> default_listing(const RootSystem& rs, const Character& chi, const std::vector<int>& gens);

// F is found by scanning W_gens. Throws NotARegion if F is empty.
LocalRegion local_region(const WeylGroup& W, const Character& chi, const std::vector<int>& listing,
                         const std::vector<int>& j_positions, const std::vector<int>& gens);
LocalRegion local_region(const WeylGroup& W, const Character& chi, const std::vector<int>& listing,
                         const std::vector<int>& j_positions);
// Region of the tabulated character chi_tag with its printed listing and J.
LocalRegion tabulated_region(const WeylGroup& W, int tag, const GoldenNum& c = GoldenNum::frac(1, 2));

struct SkewReport {
    bool skew = true;
    std::string witness;  // empty when skew
    // Shortcut certificate: every w(z) shown non-simple and outside every rank 2
    // subsystem using sign flips of w(P). Certified implies skew.
    bool certified = false;
    std::string certificate_gap;
};
SkewReport skew_check(const WeylGroup& W, const LocalRegion& region);

HModule build_calibrated(const WeylGroup& W, const LocalRegion& region);

struct RelationCheck {
    std::string name;
    bool ok = true;
    std::optional<EntryWitness> witness;
};
struct RelationReport {
    bool ok = true;
    std::vector<RelationCheck> checks;
    std::string summary() const;
};
RelationReport verify_relations(const HModule& M);

enum class Temperedness { DiscreteSeries, TemperedNotDS, NonTempered };
std::string to_string(Temperedness t);
// Classifies by the simple coordinates of all weights (the values at the fundamental coweights).
Temperedness ds_test(const HModule& M);

// Irreducible calibrated H_I summands of a calibrated module, as tau-orbit closures.
std::vector<HModule> restrict_calibrated(const HModule& M, const std::vector<int>& I);
// Plain restriction of the generators to H_I (no decomposition).
HModule restrict_to(const HModule& M, const std::vector<int>& I);

HModule im_twist(const HModule& M);
// Dual under the anti-involution t_w -> t_w^{-1}, p -> -t_{w_o} w_o(p) t_{w_o}^{-1}. M must be
// an H-module for the Weyl group W.
HModule star_dual(const WeylGroup& W, const HModule& M);

// One-dimensional modules of H(rs): t = -1, alpha acts by -c (Steinberg) or t = 1, alpha by c.
HModule steinberg(const Mat& gram, const std::vector<int>& gens, const GoldenNum& c);
HModule trivial_module(const Mat& gram, const std::vector<int>& gens, const GoldenNum& c);

// Twist by the character omega of S(V) (omega must vanish on the alpha_i, i in gens).
HModule twist_by(const HModule& M, const Vec& omega);

// Coxeter order m_ij read off the Gram matrix.
int coxeter_order(const Mat& gram, int i, int j);

}  // namespace hecke
