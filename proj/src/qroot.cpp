#include "teleport/qroot.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace teleport {

namespace {

// Element u + v√2 of Q(√2); the inverse is computed by descending the tower
// Q ⊂ Q(√2) ⊂ Q(√2,√3).
struct QSqrt2 {
    Rational u, v;
};

QSqrt2 mul(const QSqrt2& x, const QSqrt2& y) {
    return {x.u * y.u + 2 * x.v * y.v, x.u * y.v + x.v * y.u};
}

bool is_perfect_square(const mpz_class& n, mpz_class& root) {
    if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace

QRoot::QRoot(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
}

QRoot QRoot::operator-() const { return QRoot(-a_, -b_, -c_, -d_); }

QRoot& QRoot::operator+=(const QRoot& other) {
    a_ += other.a_;
    b_ += other.b_;
    c_ += other.c_;
    d_ += other.d_;
    return *this;
}

QRoot& QRoot::operator-=(const QRoot& other) {
    a_ -= other.a_;
    b_ -= other.b_;
    c_ -= other.c_;
    d_ -= other.d_;
    return *this;
}

QRoot& QRoot::operator*=(const QRoot& other) {
    *this = qroot_mul(*this, other);
    return *this;
}

QRoot& QRoot::operator/=(const QRoot& other) {
    *this = qroot_mul(*this, qroot_inv(other));
    return *this;
}

std::strong_ordering lexicographic_compare(const QRoot& x, const QRoot& y) {
    for (auto [l, r] : {std::pair{&x.a_, &y.a_}, {&x.b_, &y.b_}, {&x.c_, &y.c_}, {&x.d_, &y.d_}}) {
        int c = cmp(*l, *r);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

double QRoot::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(2.0) + c_.get_d() * std::sqrt(3.0) +
           d_.get_d() * std::sqrt(6.0);
}

std::string QRoot::str() const {
    if (is_rational()) return a_.get_str();
    std::vector<std::string> parts;
    if (sgn(a_) != 0) parts.push_back(a_.get_str());
    if (sgn(b_) != 0) parts.push_back(b_.get_str() + "√2");
    if (sgn(c_) != 0) parts.push_back(c_.get_str() + "√3");
    if (sgn(d_) != 0) parts.push_back(d_.get_str() + "√6");
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i];
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const QRoot& x) { return os << x.str(); }

QRoot qroot_mul(const QRoot& x, const QRoot& y) {
    const auto &a = x.a(), &b = x.b(), &c = x.c(), &d = x.d();
    const auto &e = y.a(), &f = y.b(), &g = y.c(), &h = y.d();
    // √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2, √6·√6 = 6
    return QRoot(a * e + 2 * b * f + 3 * c * g + 6 * d * h,
                 a * f + b * e + 3 * (c * h + d * g),
                 a * g + c * e + 2 * (b * h + d * f),
                 a * h + d * e + b * g + c * f);
}

QRoot qroot_inv(const QRoot& x) {
    if (x.is_zero()) throw std::domain_error("division by zero scalar");
    // x = u + v√3 with u, v in Q(√2); x·(u - v√3) = u² - 3v² = s + t√2.
    const QSqrt2 u{x.a(), x.b()}, v{x.c(), x.d()};
    const QSqrt2 uu = mul(u, u), vv = mul(v, v);
    const QSqrt2 st{uu.u - 3 * vv.u, uu.v - 3 * vv.v};
    const Rational norm = st.u * st.u - 2 * st.v * st.v;
    const QRoot conj3(u.u, u.v, -v.u, -v.v);
    const QRoot conj2(st.u / norm, -st.v / norm);
    return qroot_mul(conj3, conj2);
}

std::optional<QRoot> qroot_sqrt(const QRoot& x) {
    if (!x.is_rational() || sgn(x.a()) < 0) return std::nullopt;
    if (sgn(x.a()) == 0) return QRoot();
    const mpz_class p = x.a().get_num(), q = x.a().get_den();
    const mpz_class n = p * q;
    // sqrt(p/q) = sqrt(p·q)/q; write p·q = k·s² with k squarefree.
    for (long k : {1L, 2L, 3L, 6L}) {
        if (n % k != 0) continue;
        mpz_class s;
        if (!is_perfect_square(n / k, s)) continue;
        const Rational coeff(s, q);
        switch (k) {
            case 1: return QRoot(coeff);
            case 2: return QRoot(0, coeff);
            case 3: return QRoot(0, 0, coeff);
            default: return QRoot(0, 0, 0, coeff);
        }
    }
    return std::nullopt;
}

}  // namespace teleport
