#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// p + q*sqrt(5) with rational p, q.
class GoldenNum {
public:
    GoldenNum() = default;
    GoldenNum(long n) : p_(n) {}
    GoldenNum(int n) : p_(n) {}
    GoldenNum(mpq_class p, mpq_class q = 0);

    static GoldenNum parse(std::string_view s);
    static GoldenNum frac(long num, long den) { return GoldenNum(mpq_class(num, den)); }
    std::string str() const;

    const mpq_class& p() const { return p_; }
    const mpq_class& q() const { return q_; }

    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    bool is_rational() const { return sgn(q_) == 0; }
    int sign() const;

    GoldenNum conj() const { return GoldenNum(p_, -q_); }
    // field norm p^2 - 5 q^2
    mpq_class norm() const { return p_ * p_ - 5 * q_ * q_; }
    GoldenNum inv() const;

    GoldenNum& operator+=(const GoldenNum& o);
    GoldenNum& operator-=(const GoldenNum& o);
    GoldenNum& operator*=(const GoldenNum& o);
    GoldenNum& operator/=(const GoldenNum& o);

    friend GoldenNum operator+(GoldenNum a, const GoldenNum& b) { return a += b; }
    friend GoldenNum operator-(GoldenNum a, const GoldenNum& b) { return a -= b; }
    friend GoldenNum operator*(GoldenNum a, const GoldenNum& b) { return a *= b; }
    friend GoldenNum operator/(GoldenNum a, const GoldenNum& b) { return a /= b; }
    GoldenNum operator-() const { return GoldenNum(-p_, -q_); }

    friend bool operator==(const GoldenNum& a, const GoldenNum& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const GoldenNum& a, const GoldenNum& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;
    double approx() const;  // diagnostics only

private:
    mpq_class p_{0};
    mpq_class q_{0};
};

inline GoldenNum abs(const GoldenNum& x) { return x.sign() < 0 ? -x : x; }

// a = (sqrt5 + 1)/4, b = (sqrt5 - 1)/4
const GoldenNum& gold_a();
const GoldenNum& gold_b();
const GoldenNum& sqrt5();

// Linear forms in a and b, e.g. "3a+1/2", "-b/2+1/4", "(2a+1)". Used for tabulated data.
GoldenNum parse_ab(std::string_view s);

// Algebraic integer m + n*phi, phi = 2a = (1+sqrt5)/2; small machine-word arithmetic.
struct ZPhi {
    std::int64_t m = 0;
    std::int64_t n = 0;

    ZPhi() = default;
    constexpr ZPhi(std::int64_t m_, std::int64_t n_ = 0) : m(m_), n(n_) {}

    friend ZPhi operator+(ZPhi x, ZPhi y) { return {x.m + y.m, x.n + y.n}; }
    friend ZPhi operator-(ZPhi x, ZPhi y) { return {x.m - y.m, x.n - y.n}; }
    ZPhi operator-() const { return {-m, -n}; }
    // phi^2 = phi + 1
    friend ZPhi operator*(ZPhi x, ZPhi y) {
        std::int64_t nn = x.n * y.n;
        return {x.m * y.m + nn, x.m * y.n + x.n * y.m + nn};
    }
    ZPhi& operator+=(ZPhi y) { m += y.m; n += y.n; return *this; }
    ZPhi& operator-=(ZPhi y) { m -= y.m; n -= y.n; return *this; }
    friend bool operator==(ZPhi x, ZPhi y) { return x.m == y.m && x.n == y.n; }
    bool is_zero() const { return m == 0 && n == 0; }
    ZPhi conj() const { return {m + n, -n}; }
    // N(m + n phi) = m^2 + m n - n^2
    std::int64_t norm() const { return m * m + m * n - n * n; }
    int sign() const;

    GoldenNum to_golden() const;
    static bool from_golden(const GoldenNum& x, ZPhi& out);
};

}  // namespace hecke

template <>
struct std::hash<hecke::GoldenNum> {
    std::size_t operator()(const hecke::GoldenNum& x) const { return x.hash(); }
};
