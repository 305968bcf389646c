#pragma once

#include "hecke/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hecke {

using Vec = std::vector<GoldenNum>;

Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const GoldenNum& s, const Vec& x);
bool vec_is_zero(const Vec& x);
std::string vec_str(const Vec& x);

// Dense row-major matrix.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<GoldenNum> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    static Mat identity(int n);

    GoldenNum& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const GoldenNum& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    Vec apply(const Vec& x) const;
    Mat transpose() const;
    friend Mat operator*(const Mat& x, const Mat& y);
    friend Mat operator-(const Mat& x, const Mat& y);
    friend bool operator==(const Mat& x, const Mat& y) = default;
};

GoldenNum det(Mat m);
int rank(Mat m);
std::optional<Mat> inverse(const Mat& m);
// Solves m x = rhs for square nonsingular m.
std::optional<Vec> solve(const Mat& m, const Vec& rhs);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(Mat m);

using SparseVec = std::vector<std::pair<int, GoldenNum>>;  // sorted by index, no zeros

SparseVec sv_axpy(const SparseVec& y, const GoldenNum& s, const SparseVec& x);  // y + s x
GoldenNum sv_get(const SparseVec& v, int idx);

// Column-compressed sparse matrix.
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<SparseVec> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(c) {}
    static SparseMat identity(int n);
    static SparseMat scalar(int n, const GoldenNum& s);
    static SparseMat from_dense(const Mat& m);

    void set(int i, int j, const GoldenNum& x);  // appends or replaces
    GoldenNum get(int i, int j) const { return sv_get(col[j], i); }
    std::size_t nnz() const;

    SparseVec apply(const SparseVec& x) const;
    SparseMat transpose() const;
    Mat to_dense() const;
    bool is_diagonal() const;
    Vec diagonal() const;

    friend SparseMat operator*(const SparseMat& x, const SparseMat& y);
    friend SparseMat operator+(const SparseMat& x, const SparseMat& y);
    friend SparseMat operator-(const SparseMat& x, const SparseMat& y);
    friend SparseMat operator*(const GoldenNum& s, const SparseMat& x);
    friend bool operator==(const SparseMat& x, const SparseMat& y) = default;
};

struct EntryWitness {
    int row = -1, col = -1;
    GoldenNum value;
};
// First (column-major) entry where x and y differ.
std::optional<EntryWitness> first_difference(const SparseMat& x, const SparseMat& y);

// Incremental exact row reduction of a homogeneous linear system.
class SparseSolver {
public:
    // Lowest pivots on the smallest column index, which keeps rows short for upper
    // triangular systems fed bottom row first.
    enum class Pivot { Sparsest, Lowest };
    explicit SparseSolver(int unknowns, Pivot rule = Pivot::Sparsest);
    // Adds the equation sum_j row[j] x_j = 0. Returns true if it raised the rank.
    bool add_equation(const SparseVec& row);
    int unknowns() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    int nullity() const { return n_ - rank(); }
    std::vector<SparseVec> nullspace() const;

private:
    SparseVec reduce(const SparseVec& row);
    void track(const SparseVec& r, int delta);

    int n_;
    Pivot rule_;
    std::vector<int> pivot_of_col_;  // row id or -1
    std::vector<int> pivot_col_;     // per row
    std::vector<SparseVec> rows_;
    std::vector<int> occ_;
    std::vector<GoldenNum> scratch_;
    std::vector<char> touched_;
};

}  // namespace hecke
