#pragma once

#include "hecke/field.hpp"
#include "hecke/linalg.hpp"

#include <string>
#include <vector>

namespace hecke {

enum class RootType { A1, A2, A3, I2_5, H3, H4, A1xA1, A2xA1, I2_5xA1 };

RootType parse_root_type(const std::string& s);
std::string root_type_name(RootType t);

struct Rank2Subsystem {
    std::vector<int> positive;  // indices of positive roots
    std::string type;           // "A1xA1", "A2" or "I2(5)"
};

// Roots are stored in simple-root coordinates. Positive roots come first,
// root i + npos is the negative of root i.
class RootSystem {
public:
    static RootSystem h4();
    static RootSystem build(RootType t);
    // Standalone system on the simple roots I of H4 (indices 0..3).
    static RootSystem from_h4_subset(const std::vector<int>& I);

    int rank() const { return rank_; }
    int nroots() const { return static_cast<int>(roots_.size()); }
    int npos() const { return npos_; }
    const Mat& gram() const { return gram_; }
    const Vec& root(int i) const { return roots_[i]; }
    const std::vector<ZPhi>& root_z(int i) const { return roots_z_[i]; }
    bool positive(int i) const { return i < npos_; }
    int neg(int i) const { return i < npos_ ? i + npos_ : i - npos_; }
    int simple(int i) const { return i; }  // simple roots occupy indices 0..rank-1
    // Index of the root with the given coordinates, or -1.
    int find(const Vec& v) const;
    // Image of root r under s_i.
    int reflect_index(int i, int r) const { return sref_[i][r]; }
    const std::string& label() const { return label_; }
    // Simple indices of H4 this system sits on (identity for H4 itself).
    const std::vector<int>& h4_embedding() const { return embed_; }

    GoldenNum pair(const Vec& x, const Vec& y) const;
    GoldenNum norm_sq(const Vec& x) const { return pair(x, x); }
    // <v, alpha_r^vee> = <v, alpha_r> since every root has norm 2
    GoldenNum coroot_pair(const Vec& v, int r) const { return pair(v, roots_[r]); }
    Vec reflect(int r, const Vec& v) const;
    // G x, i.e. the values <x, alpha_i>
    Vec dual(const Vec& x) const { return gram_.apply(x); }

    std::vector<Vec> fundamental_weights() const;
    std::vector<Vec> fundamental_coweights() const { return fundamental_weights(); }

    // H4 only: sqrt2-stripped coordinates u with <x,y> = 2 u.u'
    Vec to_ambient(const Vec& x) const;
    Vec from_ambient(const Vec& u) const;
    bool has_ambient() const { return rank_ == 4 && label_ == "H4"; }

    // Maximal rank-2 subsystems R cap span(beta, gamma).
    std::vector<Rank2Subsystem> rank2_subsystems() const;
    // Indices (all signs) of roots in R_I for a subset I of simple indices.
    std::vector<int> parabolic_roots(const std::vector<int>& I) const;

private:
    void close_roots();

    int rank_ = 0;
    int npos_ = 0;
    std::string label_;
    std::vector<int> embed_;
    Mat gram_;
    std::vector<Vec> roots_;
    std::vector<std::vector<ZPhi>> roots_z_;
    std::vector<std::vector<int>> sref_;
};

// Coordinates in the simple-root basis, written "[x1,x2,...]" with entries parsed by parse_ab.
Vec parse_vec(const std::string& s);

}  // namespace hecke
