#include "teleport/amp.hpp"

#include <cmath>
#include <stdexcept>

namespace teleport {

namespace {

constexpr const char* kSymbolNames[4] = {"α", "β", "α*", "β*"};

std::complex<double> ipow(std::complex<double> base, int exp) {
    std::complex<double> out = 1.0;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < 4; ++i) {
        const int e = exponents[i] + other.exponents[i];
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        out.exponents[i] = static_cast<std::uint8_t>(e);
    }
    return out;
}

std::string Monomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += kSymbolNames[i];
        if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out;
}

Amp::Amp(const QRoot& constant) { add_term(Monomial{}, constant); }

Amp::Amp(const Monomial& m, const QRoot& coeff) { add_term(m, coeff); }

void Amp::add_term(const Monomial& m, const QRoot& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

int Amp::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::optional<QRoot> Amp::constant() const {
    if (terms_.empty()) return QRoot();
    if (terms_.size() == 1 && terms_.begin()->first.is_constant()) return terms_.begin()->second;
    return std::nullopt;
}

QRoot Amp::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QRoot() : it->second;
}

// Coefficients are real, so conjugation only swaps the symbols.
Amp Amp::conj() const {
    Amp out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.conj(), c);
    return out;
}

Amp Amp::operator-() const {
    Amp out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Amp& Amp::operator+=(const Amp& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Amp& Amp::operator-=(const Amp& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Amp& Amp::operator*=(const Amp& other) {
    *this = *this * other;
    return *this;
}

Amp& Amp::operator*=(const QRoot& scale) {
    if (scale.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scale;
    return *this;
}

Amp operator*(const Amp& x, const Amp& y) {
    Amp out;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, qroot_mul(cx, cy));
    return out;
}

std::string Amp::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (m.is_constant()) {
            out += c.str();
        } else if (c == QRoot(1)) {
            out += m.str();
        } else if (c == QRoot(-1)) {
            out += "-" + m.str();
        } else {
            out += c.str() + "·" + m.str();
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Amp& x) { return os << x.str(); }

Amp amp_mul(const Amp& x, const Amp& y) { return x * y; }

Amp amp_reduce(const Amp& x) {
    // Single pass: after the substitution no monomial holds both α and α*.
    const Monomial beta_pair = Monomial::of(Symbol::beta) * Monomial::of(Symbol::beta_conj);
    Amp out;
    for (const auto& [m, c] : x.terms()) {
        const int k = std::min(m[Symbol::alpha], m[Symbol::alpha_conj]);
        if (k == 0) {
            out += Amp(m, c);
            continue;
        }
        Monomial base = m;
        base.exponents[0] -= k;
        base.exponents[2] -= k;
        // (1 - ββ*)^k = Σ_t C(k,t) (-1)^t (ββ*)^t
        Monomial power = base;
        long binom = 1;
        for (int t = 0; t <= k; ++t) {
            const long sign = (t % 2 == 0) ? 1 : -1;
            out += Amp(power, c * QRoot(sign * binom));
            binom = binom * (k - t) / (t + 1);
            power = power * beta_pair;
        }
    }
    return out;
}

std::complex<double> amp_eval(const Amp& x, std::complex<double> alpha, std::complex<double> beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
        throw std::invalid_argument("input state not normalized");
    const std::complex<double> values[4] = {alpha, beta, std::conj(alpha), std::conj(beta)};
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : x.terms()) {
        std::complex<double> term = c.to_double();
        for (std::size_t i = 0; i < 4; ++i) term *= ipow(values[i], m.exponents[i]);
        sum += term;
    }
    return sum;
}

}  // namespace teleport
