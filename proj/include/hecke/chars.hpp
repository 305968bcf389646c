#pragma once

#include "hecke/weyl.hpp"

#include <utility>
#include <vector>

namespace hecke {

// An element of V^vee, identified with V through the pairing, together with the
// constant parameter c.
struct Character {
    Vec chi;
    GoldenNum c = GoldenNum::frac(1, 2);

    GoldenNum eval(const RootSystem& rs, int root) const { return rs.pair(chi, rs.root(root)); }
};

// Roots (all signs) with chi(beta) = c.
std::vector<int> p_set(const RootSystem& rs, const Character& x);
// Positive roots with chi(beta) = 0.
std::vector<int> z_set(const RootSystem& rs, const Character& x);
bool ho_check(const RootSystem& rs, const Character& x);

bool is_antidominant(const RootSystem& rs, const Vec& chi);
// (chi*, w*) with w* chi = chi* anti-dominant; w* only uses steps s_i with chi(alpha_i) > 0,
// so R(w*) avoids Z(chi).
std::pair<Character, int> antidominant(const WeylGroup& W, const Character& x);

struct ResidualPoint {
    Character chi;             // anti-dominant representative
    std::vector<int> p_pos;    // positive roots with chi(beta) = +-c
    int p_size = 0;            // |P(chi)| over all roots
    std::vector<int> z;
    GoldenNum norm_sq;
    int tag = 0;               // 1..17 for H4 once matched against the tabulated data
};

std::vector<ResidualPoint> enumerate_residual(const RootSystem& rs, const GoldenNum& c);

struct LowRankEntry {
    Character chi;
    GoldenNum norm_sq;  // closed-form value, not recomputed from chi
};
// Closed-form discrete series central characters of the small parabolic types, in the
// local simple-root coordinates of RootSystem::build(t).
std::vector<LowRankEntry> lowrank_ds_table(RootType t, const GoldenNum& c);

// Same W-orbit?
bool same_orbit(const WeylGroup& W, const Vec& x, const Vec& y);

}  // namespace hecke
