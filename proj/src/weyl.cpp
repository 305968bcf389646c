#include "hecke/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hecke {

std::string word_to_str(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (int i : word) s += "s" + std::to_string(i + 1);
    return s;
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
    nr_ = rs_.nroots();
    int n = rs_.rank();
    if (nr_ > 255) throw std::logic_error("too many roots for byte permutations");

    std::vector<std::vector<std::uint8_t>> sperm(n, std::vector<std::uint8_t>(nr_));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < nr_; ++r) sperm[i][r] = static_cast<std::uint8_t>(rs_.reflect_index(i, r));

    // breadth-first closure under left multiplication
    std::vector<std::uint8_t> perms(nr_);
    std::iota(perms.begin(), perms.end(), 0);
    std::unordered_map<std::uint32_t, int> idx;
    idx[key_of(perms.data())] = 0;
    std::vector<int> lens{0};
    for (int w = 0; w < static_cast<int>(lens.size()); ++w) {
        for (int i = 0; i < n; ++i) {
            std::vector<std::uint8_t> p(nr_);
            const std::uint8_t* pw = &perms[static_cast<std::size_t>(w) * nr_];
            for (int r = 0; r < nr_; ++r) p[r] = sperm[i][pw[r]];
            auto k = key_of(p.data());
            if (idx.count(k)) continue;
            idx[k] = static_cast<int>(lens.size());
            lens.push_back(lens[w] + 1);
            perms.insert(perms.end(), p.begin(), p.end());
        }
    }
    int N = static_cast<int>(lens.size());
    auto left = [&](int i, int w) {
        std::vector<std::uint8_t> p(nr_);
        const std::uint8_t* pw = &perms[static_cast<std::size_t>(w) * nr_];
        for (int r = 0; r < nr_; ++r) p[r] = sperm[i][pw[r]];
        return idx.at(key_of(p.data()));
    };
    std::vector<std::vector<int>> lm(n, std::vector<int>(N));
    for (int i = 0; i < n; ++i)
        for (int w = 0; w < N; ++w) lm[i][w] = left(i, w);

    // words in BFS order: lengths are nondecreasing, so s_i w is already done
    std::vector<std::vector<int>> words(N);
    for (int w = 1; w < N; ++w) {
        for (int i = 0; i < n; ++i) {
            int v = lm[i][w];
            if (lens[v] < lens[w]) {
                words[w] = {i};
                words[w].insert(words[w].end(), words[v].begin(), words[v].end());
                break;
            }
        }
    }
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (lens[x] != lens[y]) return lens[x] < lens[y];
        return words[x] < words[y];
    });
    std::vector<int> newid(N);
    for (int k = 0; k < N; ++k) newid[order[k]] = k;

    size_ = N;
    perms_.resize(perms.size());
    len_.resize(N);
    words_.resize(N);
    for (int k = 0; k < N; ++k) {
        int old = order[k];
        std::copy_n(&perms[static_cast<std::size_t>(old) * nr_], nr_, &perms_[static_cast<std::size_t>(k) * nr_]);
        len_[k] = lens[old];
        words_[k] = words[old];
    }
    for (int k = 0; k < N; ++k) index_[key_of(&perms_[static_cast<std::size_t>(k) * nr_])] = k;
    lmul_.assign(n, std::vector<int>(N));
    for (int i = 0; i < n; ++i)
        for (int w = 0; w < N; ++w) lmul_[i][newid[w]] = newid[lm[i][w]];
    inv_.resize(N);
    for (int w = 0; w < N; ++w) {
        std::vector<std::uint8_t> p(nr_);
        const std::uint8_t* pw = &perms_[static_cast<std::size_t>(w) * nr_];
        for (int r = 0; r < nr_; ++r) p[pw[r]] = static_cast<std::uint8_t>(r);
        inv_[w] = index_.at(key_of(p.data()));
    }
    // w s_i = (s_i w^{-1})^{-1}
    rmul_.assign(n, std::vector<int>(N));
    for (int i = 0; i < n; ++i)
        for (int w = 0; w < N; ++w) rmul_[i][w] = inv_[lmul_[i][inv_[w]]];
    build_classes();
}

std::uint32_t WeylGroup::key_of(const std::uint8_t* perm) const {
    std::uint32_t k = 0;
    for (int i = 0; i < rs_.rank(); ++i) k |= static_cast<std::uint32_t>(perm[i]) << (8 * i);
    return k;
}

void WeylGroup::build_classes() {
    class_of_.assign(size_, -1);
    for (int w = 0; w < size_; ++w) {
        if (class_of_[w] >= 0) continue;
        int c = static_cast<int>(class_reps_.size());
        class_reps_.push_back(w);
        std::vector<int> stack{w};
        class_of_[w] = c;
        int count = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++count;
            for (int i = 0; i < rank(); ++i) {
                int y = lmul_[i][rmul_[i][x]];
                if (class_of_[y] < 0) {
                    class_of_[y] = c;
                    stack.push_back(y);
                }
            }
        }
        class_sizes_.push_back(count);
    }
}

Vec WeylGroup::apply(int w, const Vec& v) const {
    Vec out(rank());
    for (int i = 0; i < rank(); ++i) {
        if (v[i].is_zero()) continue;
        out = vec_add(out, vec_scale(v[i], rs_.root(apply_root(w, i))));
    }
    return out;
}

Mat WeylGroup::matrix(int w) const {
    int n = rank();
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        const Vec& c = rs_.root(apply_root(w, i));
        for (int j = 0; j < n; ++j) m(j, i) = c[j];
    }
    return m;
}

std::string WeylGroup::word_str(int w) const { return word_to_str(words_[w]); }

int WeylGroup::mul(int x, int y) const {
    std::vector<std::uint8_t> p(nr_);
    const std::uint8_t* px = &perms_[static_cast<std::size_t>(x) * nr_];
    const std::uint8_t* py = &perms_[static_cast<std::size_t>(y) * nr_];
    for (int r = 0; r < rank(); ++r) p[r] = px[py[r]];
    return index_.at(key_of(p.data()));
}

int WeylGroup::from_word(const std::vector<int>& word) const {
    int w = 0;
    for (int i : word) {
        if (i < 0 || i >= rank()) throw std::invalid_argument("generator index out of range");
        w = rmul_[i][w];
    }
    return w;
}

int WeylGroup::parse(const std::string& s) const {
    int w = 0;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '.' || ch == '*') {
            ++i;
        } else if (ch == 's' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            int g = s[i + 1] - '1';
            if (g < 0 || g >= rank()) throw ParseError("generator out of range", i);
            w = rmul_[g][w];
            i += 2;
            any = true;
        } else if (s.compare(i, 3, "w_o") == 0) {
            w = mul(w, longest());
            i += 3;
            any = true;
        } else if (s.compare(i, 2, "wo") == 0) {
            w = mul(w, longest());
            i += 2;
            any = true;
        } else if (ch == 'e' && !any) {
            ++i;
            any = true;
        } else {
            throw ParseError("unexpected character in word", i);
        }
    }
    if (!any) throw ParseError("empty word", 0);
    return w;
}

bool WeylGroup::bruhat_le(int u, int w) const {
    while (true) {
        if (len_[u] > len_[w]) return false;
        if (w == 0) return u == 0;
        int s = words_[w][0];  // a left descent of w
        int sw = lmul_[s][w];
        int su = lmul_[s][u];
        if (len_[su] < len_[u]) u = su;
        w = sw;
    }
}

std::vector<int> WeylGroup::min_left_coset_reps(const std::vector<int>& I) const {
    std::vector<int> out;
    for (int w = 0; w < size_; ++w)
        if (std::all_of(I.begin(), I.end(), [&](int i) { return rs_.positive(apply_root(w, i)); }))
            out.push_back(w);
    return out;
}

std::vector<int> WeylGroup::min_right_coset_reps(const std::vector<int>& I) const {
    std::vector<int> out;
    for (int w = 0; w < size_; ++w)
        if (std::all_of(I.begin(), I.end(), [&](int i) { return rs_.positive(apply_root(inv_[w], i)); }))
            out.push_back(w);
    return out;
}

std::vector<int> WeylGroup::min_double_coset_reps(const std::vector<int>& I, const std::vector<int>& J) const {
    std::vector<int> out;
    for (int w = 0; w < size_; ++w) {
        bool ok = std::all_of(J.begin(), J.end(), [&](int j) { return rs_.positive(apply_root(w, j)); }) &&
                  std::all_of(I.begin(), I.end(), [&](int i) { return rs_.positive(apply_root(inv_[w], i)); });
        if (ok) out.push_back(w);
    }
    return out;
}

bool WeylGroup::in_subgroup(int w, const std::vector<int>& I) const {
    // w lies in W_I iff every inversion of w is a root of R_I
    for (int r = 0; r < rs_.npos(); ++r) {
        if (rs_.positive(apply_root(w, r))) continue;
        for (int j = 0; j < rank(); ++j)
            if (!rs_.root(r)[j].is_zero() && std::find(I.begin(), I.end(), j) == I.end()) return false;
    }
    return true;
}

std::vector<int> WeylGroup::parabolic_subgroup(const std::vector<int>& I) const {
    std::vector<int> out;
    for (int w = 0; w < size_; ++w)
        if (in_subgroup(w, I)) out.push_back(w);
    return out;
}

int WeylGroup::longest_in(const std::vector<int>& I) const {
    int w = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i : I)
            if (rs_.positive(apply_root(w, i))) {
                w = rmul_[i][w];
                grew = true;
                break;
            }
    }
    return w;
}

std::vector<int> WeylGroup::stabilizer(const Vec& lambda) const {
    // w lambda = lambda iff <lambda, w^{-1} alpha_i> = <lambda, alpha_i> for every i
    std::vector<GoldenNum> vals(nr_);
    for (int r = 0; r < nr_; ++r) vals[r] = rs_.pair(lambda, rs_.root(r));
    std::vector<int> id(nr_);
    std::vector<GoldenNum> distinct;
    for (int r = 0; r < nr_; ++r) {
        auto it = std::find(distinct.begin(), distinct.end(), vals[r]);
        id[r] = static_cast<int>(it - distinct.begin());
        if (it == distinct.end()) distinct.push_back(vals[r]);
    }
    std::vector<int> out;
    for (int w = 0; w < size_; ++w) {
        int wi = inv_[w];
        bool ok = true;
        for (int i = 0; i < rank() && ok; ++i) ok = id[apply_root(wi, i)] == id[i];
        if (ok) out.push_back(w);
    }
    return out;
}

}  // namespace hecke
