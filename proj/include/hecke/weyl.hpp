#pragma once

#include "hecke/rootsys.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace hecke {

// Finite Coxeter group of a root system, stored as permutations of the root indices.
// Elements are numbered by (length, lex-minimal reduced word); 0 is the identity and
// size()-1 the longest element.
class WeylGroup {
public:
    explicit WeylGroup(RootSystem rs);

    const RootSystem& roots() const { return rs_; }
    int size() const { return size_; }
    int rank() const { return rs_.rank(); }
    int identity() const { return 0; }
    int longest() const { return size_ - 1; }

    int apply_root(int w, int r) const { return perms_[static_cast<std::size_t>(w) * nr_ + r]; }
    Vec apply(int w, const Vec& v) const;
    Mat matrix(int w) const;  // columns are w(alpha_i)

    int length(int w) const { return len_[w]; }
    const std::vector<int>& word(int w) const { return words_[w]; }
    std::string word_str(int w) const;

    int mul(int x, int y) const;
    int lmul(int i, int w) const { return lmul_[i][w]; }  // s_i w
    int rmul(int w, int i) const { return rmul_[i][w]; }  // w s_i
    int inverse(int w) const { return inv_[w]; }
    int from_word(const std::vector<int>& word) const;
    // Tokens s1..s9 and w_o, optionally separated by '.', '*', or spaces; "e" is the identity.
    int parse(const std::string& s) const;

    bool left_descent(int w, int i) const { return !rs_.positive(apply_root(inv_[w], i)); }
    bool right_descent(int w, int i) const { return !rs_.positive(apply_root(w, i)); }

    bool bruhat_le(int u, int w) const;

    // {w : w(alpha_i) > 0 for i in I}, minimal representatives of w W_I
    std::vector<int> min_left_coset_reps(const std::vector<int>& I) const;
    // {w : w^{-1}(alpha_i) > 0 for i in I}
    std::vector<int> min_right_coset_reps(const std::vector<int>& I) const;
    std::vector<int> min_double_coset_reps(const std::vector<int>& I, const std::vector<int>& J) const;
    std::vector<int> parabolic_subgroup(const std::vector<int>& I) const;
    int longest_in(const std::vector<int>& I) const;

    int num_classes() const { return static_cast<int>(class_reps_.size()); }
    int class_of(int w) const { return class_of_[w]; }
    int class_rep(int c) const { return class_reps_[c]; }
    int class_size(int c) const { return class_sizes_[c]; }

    std::vector<int> stabilizer(const Vec& lambda) const;
    bool in_subgroup(int w, const std::vector<int>& I) const;

private:
    std::uint32_t key_of(const std::uint8_t* perm) const;
    void build_classes();

    RootSystem rs_;
    int nr_ = 0;
    int size_ = 0;
    std::vector<std::uint8_t> perms_;
    std::vector<int> len_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<int>> lmul_, rmul_;
    std::vector<int> inv_;
    std::unordered_map<std::uint32_t, int> index_;
    std::vector<int> class_of_, class_reps_, class_sizes_;
};

std::string word_to_str(const std::vector<int>& word);

}  // namespace hecke
