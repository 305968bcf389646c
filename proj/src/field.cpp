#include "hecke/field.hpp"

#include <cctype>
#include <cmath>

namespace hecke {

namespace {

// sign of x + y*sqrt5
template <class T>
int sign_xy(const T& x, const T& y) {
    int sx = sgn(x), sy = sgn(y);
    if (sx >= 0 && sy >= 0) return (sx > 0 || sy > 0) ? 1 : 0;
    if (sx <= 0 && sy <= 0) return -1;
    // opposite signs: compare x^2 with 5 y^2
    T lhs = x * x, rhs = 5 * y * y;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // unreachable for rationals, sqrt5 irrational
    return (c > 0) ? sx : sy;
}

std::size_t hash_mpz(const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t())) * 0x9e3779b97f4a7c15ULL;
    if (mpz_size(z.get_mpz_t()) > 0) h ^= mpz_getlimbn(z.get_mpz_t(), 0);
    return h ^ static_cast<std::size_t>(sgn(z) + 1);
}

}  // namespace

GoldenNum::GoldenNum(mpq_class p, mpq_class q) : p_(std::move(p)), q_(std::move(q)) {
    p_.canonicalize();
    q_.canonicalize();
}

int GoldenNum::sign() const { return sign_xy(p_, q_); }

GoldenNum GoldenNum::inv() const {
    if (is_zero()) throw std::domain_error("GoldenNum: division by zero");
    if (sgn(q_) == 0) return GoldenNum(1 / p_);
    mpq_class n = norm();
    return GoldenNum(p_ / n, -q_ / n);
}

GoldenNum& GoldenNum::operator+=(const GoldenNum& o) {
    p_ += o.p_;
    if (sgn(o.q_) != 0) q_ += o.q_;
    return *this;
}

GoldenNum& GoldenNum::operator-=(const GoldenNum& o) {
    p_ -= o.p_;
    if (sgn(o.q_) != 0) q_ -= o.q_;
    return *this;
}

GoldenNum& GoldenNum::operator*=(const GoldenNum& o) {
    if (sgn(q_) == 0 && sgn(o.q_) == 0) {
        p_ *= o.p_;
        return *this;
    }
    if (sgn(o.q_) == 0) {
        p_ *= o.p_;
        q_ *= o.p_;
        return *this;
    }
    if (sgn(q_) == 0) {
        q_ = p_ * o.q_;
        p_ *= o.p_;
        return *this;
    }
    mpq_class np = p_ * o.p_ + 5 * q_ * o.q_;
    mpq_class nq = p_ * o.q_ + q_ * o.p_;
    p_.swap(np);
    q_.swap(nq);
    return *this;
}

GoldenNum& GoldenNum::operator/=(const GoldenNum& o) {
    if (o.is_zero()) throw std::domain_error("GoldenNum: division by zero");
    if (sgn(o.q_) == 0) {
        p_ /= o.p_;
        if (sgn(q_) != 0) q_ /= o.p_;
        return *this;
    }
    return *this *= o.inv();
}

std::size_t GoldenNum::hash() const {
    std::size_t h = hash_mpz(p_.get_num());
    h = h * 31 + hash_mpz(p_.get_den());
    h = h * 31 + hash_mpz(q_.get_num());
    h = h * 31 + hash_mpz(q_.get_den());
    return h;
}

double GoldenNum::approx() const { return p_.get_d() + q_.get_d() * std::sqrt(5.0); }

std::string GoldenNum::str() const {
    if (sgn(q_) == 0) return p_.get_str();
    std::string qs = q_.get_str() + "*r5";
    if (sgn(p_) == 0) return qs;
    std::string out = p_.get_str();
    if (sgn(q_) > 0) out += '+';
    return out + qs;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        skip_ws();
        return i >= s.size();
    }
    // accepts ASCII '-' and U+2212
    bool eat_minus() {
        skip_ws();
        if (i < s.size() && s[i] == '-') {
            ++i;
            return true;
        }
        if (s.substr(i, 3) == "\xE2\x88\x92") {
            i += 3;
            return true;
        }
        return false;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat(std::string_view w) {
        skip_ws();
        if (s.substr(i, w.size()) == w) {
            i += w.size();
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    mpz_class integer() {
        skip_ws();
        std::size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) throw ParseError("expected digits", st);
        return mpz_class(std::string(s.substr(st, i - st)));
    }
    mpq_class rational() {
        mpz_class num = integer();
        if (eat('/')) {
            std::size_t at = i;
            mpz_class den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
            mpq_class r(num, den);
            r.canonicalize();
            return r;
        }
        return mpq_class(num);
    }
};

}  // namespace

GoldenNum GoldenNum::parse(std::string_view s) {
    Cursor c{s};
    if (c.at_end()) throw ParseError("empty number", 0);
    mpq_class p = 0, q = 0;
    bool neg = c.eat_minus();
    if (!neg) c.eat('+');
    // first term: rational, rational*r5, or r5
    auto term = [&](bool negative, bool& is_sqrt) {
        mpq_class v = 1;
        bool have_num = false;
        if (c.peek_digit()) {
            v = c.rational();
            have_num = true;
        }
        is_sqrt = false;
        if (have_num ? c.eat("*r5") : c.eat("r5")) is_sqrt = true;
        else if (!have_num) throw ParseError("expected rational or r5", c.i);
        return negative ? mpq_class(-v) : v;
    };
    bool sq = false;
    mpq_class first = term(neg, sq);
    (sq ? q : p) = first;
    if (!c.at_end()) {
        if (sq) throw ParseError("unexpected input after sqrt5 term", c.i);
        bool neg2 = c.eat_minus();
        if (!neg2 && !c.eat('+')) throw ParseError("expected '+' or '-'", c.i);
        bool sq2 = false;
        q = term(neg2, sq2);
        if (!sq2) throw ParseError("second term must carry *r5", c.i);
        if (!c.at_end()) throw ParseError("trailing input", c.i);
    }
    return GoldenNum(p, q);
}

const GoldenNum& gold_a() {
    static const GoldenNum a(mpq_class(1, 4), mpq_class(1, 4));
    return a;
}
const GoldenNum& gold_b() {
    static const GoldenNum b(mpq_class(-1, 4), mpq_class(1, 4));
    return b;
}
const GoldenNum& sqrt5() {
    static const GoldenNum r(0, 1);
    return r;
}

namespace {

// expr := term (('+'|'-') term)* ; term := factor (('*'|'/')? factor)* ; factor := '-' factor | int | a | b | r5 | '(' expr ')'
struct ExprParser {
    Cursor c;

    GoldenNum expr() {
        GoldenNum v = term();
        for (;;) {
            if (c.eat('+')) v += term();
            else if (c.eat_minus()) v -= term();
            else return v;
        }
    }
    bool factor_start() {
        c.skip_ws();
        if (c.i >= c.s.size()) return false;
        char ch = c.s[c.i];
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'a' || ch == 'b' || ch == 'r' ||
               ch == '(';
    }
    GoldenNum term() {
        GoldenNum v = factor();
        for (;;) {
            if (c.eat('*')) v *= factor();
            else if (c.eat('/')) {
                std::size_t at = c.i;
                GoldenNum d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else if (factor_start()) v *= factor();
            else return v;
        }
    }
    GoldenNum factor() {
        if (c.eat_minus()) return -factor();
        if (c.eat('(')) {
            GoldenNum v = expr();
            if (!c.eat(')')) throw ParseError("expected ')'", c.i);
            return v;
        }
        if (c.eat("r5")) return sqrt5();
        if (c.eat('a')) return gold_a();
        if (c.eat('b')) return gold_b();
        if (c.peek_digit()) return GoldenNum(mpq_class(c.integer()));
        throw ParseError("unexpected character", c.i);
    }
};

}  // namespace

GoldenNum parse_ab(std::string_view s) {
    ExprParser ep{Cursor{s}};
    if (ep.c.at_end()) throw ParseError("empty expression", 0);
    GoldenNum v = ep.expr();
    if (!ep.c.at_end()) throw ParseError("trailing input", ep.c.i);
    return v;
}

int ZPhi::sign() const {
    // m + n phi = (2m + n + n sqrt5)/2
    __int128 x = static_cast<__int128>(2) * m + n, y = n;
    if (x >= 0 && y >= 0) return (x > 0 || y > 0) ? 1 : 0;
    if (x <= 0 && y <= 0) return -1;
    __int128 lhs = x * x, rhs = 5 * y * y;
    return lhs > rhs ? (x > 0 ? 1 : -1) : (y > 0 ? 1 : -1);
}

GoldenNum ZPhi::to_golden() const {
    mpq_class half_n(static_cast<long>(n), 2);
    half_n.canonicalize();
    return GoldenNum(mpq_class(static_cast<long>(m)) + half_n, half_n);
}

bool ZPhi::from_golden(const GoldenNum& x, ZPhi& out) {
    // p + q sqrt5 = m + n (1+sqrt5)/2  =>  n = 2q, m = p - q
    mpq_class n = 2 * x.q(), m = x.p() - x.q();
    if (n.get_den() != 1 || m.get_den() != 1) return false;
    if (!n.get_num().fits_slong_p() || !m.get_num().fits_slong_p()) return false;
    out = ZPhi(m.get_num().get_si(), n.get_num().get_si());
    return true;
}

}  // namespace hecke
