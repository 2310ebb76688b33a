#pragma once

#include "teleport/qroot.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace teleport {

/// Free symbols of the amplitude ring.
enum class Symbol : std::uint8_t { alpha = 0, beta = 1, alpha_conj = 2, beta_conj = 3 };

/// Exponent vector over (α, β, α*, β*).
struct Monomial {
    std::array<std::uint8_t, 4> exponents{};

    static Monomial of(Symbol s) {
        Monomial m;
        m.exponents[static_cast<std::size_t>(s)] = 1;
        return m;
    }

    std::uint8_t operator[](Symbol s) const { return exponents[static_cast<std::size_t>(s)]; }
    int degree() const { return exponents[0] + exponents[1] + exponents[2] + exponents[3]; }
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& other) const;
    Monomial conj() const { return Monomial{{exponents[2], exponents[3], exponents[0], exponents[1]}}; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    /// "α β*", "α^2", "" for the constant monomial.
    std::string str() const;
};

/// Polynomial in α, β, α*, β* with coefficients in Q(√2,√3).
///
/// Zero coefficients are never stored. Products are not reduced automatically;
/// call amp_reduce to eliminate α·α* through the normalization |α|² + |β|² = 1.
class Amp {
public:
    using Terms = std::map<Monomial, QRoot>;

    Amp() = default;
    Amp(long value) : Amp(QRoot(value)) {}
    Amp(const QRoot& constant);
    Amp(const Monomial& m, const QRoot& coeff);

    static Amp alpha() { return Amp(Monomial::of(Symbol::alpha), 1); }
    static Amp beta() { return Amp(Monomial::of(Symbol::beta), 1); }
    static Amp symbol(Symbol s) { return Amp(Monomial::of(s), 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    /// The value if the polynomial has no symbol dependence.
    std::optional<QRoot> constant() const;
    QRoot coefficient(const Monomial& m) const;

    Amp conj() const;

    Amp operator-() const;
    Amp& operator+=(const Amp& other);
    Amp& operator-=(const Amp& other);
    Amp& operator*=(const Amp& other);
    Amp& operator*=(const QRoot& scale);

    friend Amp operator+(Amp x, const Amp& y) { return x += y; }
    friend Amp operator-(Amp x, const Amp& y) { return x -= y; }
    friend Amp operator*(const Amp& x, const Amp& y);
    friend Amp operator*(Amp x, const QRoot& y) { return x *= y; }
    friend Amp operator*(const QRoot& x, Amp y) { return y *= x; }

    /// Structural equality of canonical forms.
    friend bool operator==(const Amp& x, const Amp& y) { return x.terms_ == y.terms_; }

    std::string str() const;

private:
    void add_term(const Monomial& m, const QRoot& coeff);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Amp& x);

Amp amp_mul(const Amp& x, const Amp& y);

/// Canonical representative modulo (α·α* + β·β* - 1): every α·α* is
/// replaced by 1 - β·β*.
Amp amp_reduce(const Amp& x);

/// Numeric substitution. Throws std::invalid_argument("input state not
/// normalized") unless |alpha|² + |beta|² = 1 within 1e-12.
std::complex<double> amp_eval(const Amp& x, std::complex<double> alpha, std::complex<double> beta);

}  // namespace teleport
