#include "hecke/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

Vec vec_add(const Vec& x, const Vec& y) {
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

Vec vec_scale(const GoldenNum& s, const Vec& x) {
    Vec r(x);
    for (auto& e : r) e *= s;
    return r;
}

bool vec_is_zero(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](const GoldenNum& e) { return e.is_zero(); });
}

std::string vec_str(const Vec& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += x[i].str();
    }
    return s + ")";
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Mat::apply(const Vec& x) const {
    Vec r(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!(*this)(i, j).is_zero() && !x[j].is_zero()) r[i] += (*this)(i, j) * x[j];
    return r;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const GoldenNum& xik = x(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j)
                if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
        }
    return r;
}

Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& m) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        GoldenNum inv = m(r, c).inv();
        for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            GoldenNum f = m(i, c);
            for (int j = c; j < m.cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

GoldenNum det(Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: non-square matrix");
    GoldenNum d = 1;
    int n = m.rows;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        GoldenNum inv = m(c, c).inv();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            GoldenNum f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<Mat> inverse(const Mat& m) {
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Mat& m, const Vec& rhs) {
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    return inv->apply(rhs);
}

std::vector<Vec> nullspace(Mat m) {
    auto piv = rref(m);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        Vec x(m.cols);
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m(static_cast<int>(r), f);
        basis.push_back(std::move(x));
    }
    return basis;
}

SparseVec sv_axpy(const SparseVec& y, const GoldenNum& s, const SparseVec& x) {
    if (s.is_zero()) return y;
    SparseVec r;
    r.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            r.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            r.emplace_back(x[j].first, s * x[j].second);
            ++j;
        } else {
            GoldenNum v = y[i].second + s * x[j].second;
            if (!v.is_zero()) r.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

GoldenNum sv_get(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& e, int k) { return e.first < k; });
    if (it != v.end() && it->first == idx) return it->second;
    return 0;
}

SparseMat SparseMat::identity(int n) { return scalar(n, 1); }

SparseMat SparseMat::scalar(int n, const GoldenNum& s) {
    SparseMat m(n, n);
    if (!s.is_zero())
        for (int i = 0; i < n; ++i) m.col[i].emplace_back(i, s);
    return m;
}

SparseMat SparseMat::from_dense(const Mat& d) {
    SparseMat m(d.rows, d.cols);
    for (int j = 0; j < d.cols; ++j)
        for (int i = 0; i < d.rows; ++i)
            if (!d(i, j).is_zero()) m.col[j].emplace_back(i, d(i, j));
    return m;
}

void SparseMat::set(int i, int j, const GoldenNum& x) {
    auto& c = col[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int k) { return e.first < k; });
    if (it != c.end() && it->first == i) {
        if (x.is_zero()) c.erase(it);
        else it->second = x;
    } else if (!x.is_zero()) {
        c.insert(it, {i, x});
    }
}

std::size_t SparseMat::nnz() const {
    std::size_t n = 0;
    for (const auto& c : col) n += c.size();
    return n;
}

namespace {

struct Accumulator {
    std::vector<GoldenNum> val;
    std::vector<char> used;
    std::vector<int> idx;

    explicit Accumulator(int n) : val(n), used(n, 0) {}
    void add(int i, const GoldenNum& x) {
        if (!used[i]) {
            used[i] = 1;
            idx.push_back(i);
            val[i] = x;
        } else {
            val[i] += x;
        }
    }
    void add_mul(int i, const GoldenNum& s, const GoldenNum& x) { add(i, s * x); }
    SparseVec take() {
        std::sort(idx.begin(), idx.end());
        SparseVec r;
        r.reserve(idx.size());
        for (int i : idx) {
            if (!val[i].is_zero()) r.emplace_back(i, std::move(val[i]));
            val[i] = GoldenNum();
            used[i] = 0;
        }
        idx.clear();
        return r;
    }
};

}  // namespace

SparseVec SparseMat::apply(const SparseVec& x) const {
    Accumulator acc(rows);
    for (const auto& [k, xv] : x)
        for (const auto& [i, v] : col[k]) acc.add_mul(i, v, xv);
    return acc.take();
}

SparseMat SparseMat::transpose() const {
    SparseMat t(cols, rows);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[j]) t.col[i].emplace_back(j, v);
    return t;
}

Mat SparseMat::to_dense() const {
    Mat d(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[j]) d(i, j) = v;
    return d;
}

bool SparseMat::is_diagonal() const {
    for (int j = 0; j < cols; ++j)
        for (const auto& e : col[j])
            if (e.first != j) return false;
    return true;
}

Vec SparseMat::diagonal() const {
    Vec d(std::min(rows, cols));
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = get(static_cast<int>(j), static_cast<int>(j));
    return d;
}

SparseMat operator*(const SparseMat& x, const SparseMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("SparseMat: shape mismatch");
    SparseMat r(x.rows, y.cols);
    Accumulator acc(x.rows);
    for (int j = 0; j < y.cols; ++j) {
        for (const auto& [k, yv] : y.col[j])
            for (const auto& [i, xv] : x.col[k]) acc.add_mul(i, xv, yv);
        r.col[j] = acc.take();
    }
    return r;
}

SparseMat operator+(const SparseMat& x, const SparseMat& y) {
    SparseMat r(x.rows, x.cols);
    for (int j = 0; j < x.cols; ++j) r.col[j] = sv_axpy(x.col[j], 1, y.col[j]);
    return r;
}

SparseMat operator-(const SparseMat& x, const SparseMat& y) {
    SparseMat r(x.rows, x.cols);
    for (int j = 0; j < x.cols; ++j) r.col[j] = sv_axpy(x.col[j], -1, y.col[j]);
    return r;
}

SparseMat operator*(const GoldenNum& s, const SparseMat& x) {
    SparseMat r(x.rows, x.cols);
    if (s.is_zero()) return r;
    for (int j = 0; j < x.cols; ++j) {
        r.col[j] = x.col[j];
        for (auto& e : r.col[j]) e.second *= s;
    }
    return r;
}

std::optional<EntryWitness> first_difference(const SparseMat& x, const SparseMat& y) {
    for (int j = 0; j < x.cols; ++j) {
        if (x.col[j] == y.col[j]) continue;
        SparseVec d = sv_axpy(x.col[j], -1, y.col[j]);
        if (!d.empty()) return EntryWitness{d.front().first, j, d.front().second};
    }
    return std::nullopt;
}

SparseSolver::SparseSolver(int unknowns, Pivot rule)
    : n_(unknowns), rule_(rule), pivot_of_col_(unknowns, -1), occ_(unknowns, 0), scratch_(unknowns),
      touched_(unknowns, 0) {}

void SparseSolver::track(const SparseVec& r, int delta) {
    for (const auto& e : r) occ_[e.first] += delta;
}

SparseVec SparseSolver::reduce(const SparseVec& row) {
    std::vector<int> idx;
    auto add = [&](int j, const GoldenNum& v) {
        if (!touched_[j]) {
            touched_[j] = 1;
            idx.push_back(j);
            scratch_[j] = v;
        } else {
            scratch_[j] += v;
        }
    };
    for (const auto& [j, v] : row) {
        int pr = pivot_of_col_[j];
        if (pr < 0) {
            add(j, v);
        } else {
            for (const auto& [k, w] : rows_[pr])
                if (k != j) add(k, -(v * w));
        }
    }
    std::sort(idx.begin(), idx.end());
    SparseVec out;
    for (int j : idx) {
        if (!scratch_[j].is_zero()) out.emplace_back(j, std::move(scratch_[j]));
        scratch_[j] = GoldenNum();
        touched_[j] = 0;
    }
    return out;
}

bool SparseSolver::add_equation(const SparseVec& row) {
    SparseVec r = reduce(row);
    if (r.empty()) return false;
    // pivot: column with fewest occurrences in the stored rows
    std::size_t best = 0;
    if (rule_ == Pivot::Sparsest)
        for (std::size_t t = 1; t < r.size(); ++t)
            if (occ_[r[t].first] < occ_[r[best].first]) best = t;
    int pc = r[best].first;
    GoldenNum inv = r[best].second.inv();
    for (auto& e : r) e.second *= inv;
    int id = static_cast<int>(rows_.size());
    // eliminate pc from existing rows
    if (occ_[pc] > 0) {
        for (int q = 0; q < id; ++q) {
            GoldenNum f = sv_get(rows_[q], pc);
            if (f.is_zero()) continue;
            track(rows_[q], -1);
            rows_[q] = sv_axpy(rows_[q], -f, r);
            track(rows_[q], +1);
        }
    }
    track(r, +1);
    rows_.push_back(std::move(r));
    pivot_col_.push_back(pc);
    pivot_of_col_[pc] = id;
    return true;
}

std::vector<SparseVec> SparseSolver::nullspace() const {
    std::vector<int> free_index(n_, -1);
    std::vector<SparseVec> basis;
    for (int j = 0; j < n_; ++j)
        if (pivot_of_col_[j] < 0) {
            free_index[j] = static_cast<int>(basis.size());
            basis.push_back({{j, GoldenNum(1)}});
        }
    for (std::size_t q = 0; q < rows_.size(); ++q)
        for (const auto& [j, v] : rows_[q])
            if (free_index[j] >= 0) basis[free_index[j]].emplace_back(pivot_col_[q], -v);
    for (auto& b : basis) std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return basis;
}

}  // namespace hecke
