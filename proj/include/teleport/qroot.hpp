#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace teleport {

using Rational = mpq_class;

/// Exact element of the field Q(√2,√3), stored as a + b√2 + c√3 + d√6.
///
/// Every numeric prefactor that shows up in the teleportation states
/// (1/√2, 1/2, 1/(2√2), 1/√12 = √3/6, 1/√3 = √3/3) lives here, so no
/// floating point enters the exact backend.
class QRoot {
public:
    QRoot() = default;
    QRoot(long value) : a_(value) {}
    explicit QRoot(Rational a, Rational b = 0, Rational c = 0, Rational d = 0);

    static QRoot sqrt2() { return QRoot(0, 1, 0, 0); }
    static QRoot sqrt3() { return QRoot(0, 0, 1, 0); }
    static QRoot sqrt6() { return QRoot(0, 0, 0, 1); }
    static QRoot fraction(long num, long den) { return QRoot(Rational(num, den)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
    bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }

    QRoot operator-() const;
    QRoot& operator+=(const QRoot& other);
    QRoot& operator-=(const QRoot& other);
    QRoot& operator*=(const QRoot& other);
    QRoot& operator/=(const QRoot& other);

    friend QRoot operator+(QRoot x, const QRoot& y) { return x += y; }
    friend QRoot operator-(QRoot x, const QRoot& y) { return x -= y; }
    friend QRoot operator*(QRoot x, const QRoot& y) { return x *= y; }
    friend QRoot operator/(QRoot x, const QRoot& y) { return x /= y; }

    friend bool operator==(const QRoot& x, const QRoot& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    /// Lexicographic on (a, b, c, d); only used to give containers a total order.
    friend std::strong_ordering lexicographic_compare(const QRoot& x, const QRoot& y);

    /// Numeric value in double precision.
    double to_double() const;

    /// "1/4", "(1/2√2)", "(1 + -1/3√6)": zero components are omitted.
    std::string str() const;

private:
    Rational a_{0}, b_{0}, c_{0}, d_{0};
};

std::ostream& operator<<(std::ostream& os, const QRoot& x);

/// Exact product in Q(√2,√3).
QRoot qroot_mul(const QRoot& x, const QRoot& y);

/// Multiplicative inverse; throws std::domain_error("division by zero scalar") on zero.
QRoot qroot_inv(const QRoot& x);

/// Non-negative square root when it lies in the field.
///
/// Only rational radicands are handled: sqrt(p/q) is in the field iff the
/// squarefree part of p·q is one of 1, 2, 3, 6. Anything else yields nullopt.
std::optional<QRoot> qroot_sqrt(const QRoot& x);

}  // namespace teleport
