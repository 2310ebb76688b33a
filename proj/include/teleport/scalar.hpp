#pragma once

#include "teleport/amp.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace teleport {

using Complex = std::complex<double>;

/// Residual norm below which the numeric backend treats a vector as zero.
inline constexpr double kNumericRankTolerance = 1e-10;

/// Amplitudes with magnitude at or below this are not stored by numeric states.
inline constexpr double kNumericPruneTolerance = 1e-14;

/// Backend hooks used by the state, basis and protocol templates.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Amp> {
    static constexpr const char* backend = "exact";

    static Amp zero() { return {}; }
    static Amp one() { return Amp(1); }
    static Amp from(const QRoot& q) { return Amp(q); }
    static Amp conj(const Amp& x) { return x.conj(); }
    static Amp canonical(const Amp& x) { return amp_reduce(x); }
    static bool negligible(const Amp& x) { return x.is_zero(); }

    static QRoot require_constant(const Amp& x, const char* what) {
        auto c = amp_reduce(x).constant();
        if (!c) throw std::domain_error(std::string(what) + " depends on free symbols: " + x.str());
        return *c;
    }

    static Amp inverse(const Amp& x) { return Amp(qroot_inv(require_constant(x, "divisor"))); }

    static Amp inv_sqrt(const Amp& norm_sq) {
        const QRoot n2 = require_constant(norm_sq, "norm");
        if (n2.is_zero()) throw std::domain_error("cannot normalize the zero state");
        auto root = qroot_sqrt(n2);
        if (!root) throw std::domain_error("norm is not expressible in Q(√2,√3): " + n2.str());
        return Amp(qroot_inv(*root));
    }

    /// Exact zero test on a (reduced, constant) squared norm.
    static bool rank_zero(const Amp& norm_sq) { return amp_reduce(norm_sq).is_zero(); }

    static std::string str(const Amp& x) { return x.str(); }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr const char* backend = "numeric";

    static Complex zero() { return 0.0; }
    static Complex one() { return 1.0; }
    static Complex from(const QRoot& q) { return q.to_double(); }
    static Complex conj(const Complex& x) { return std::conj(x); }
    static Complex canonical(const Complex& x) { return x; }
    static bool negligible(const Complex& x) { return std::abs(x) <= kNumericPruneTolerance; }

    static double require_constant(const Complex& x, const char*) { return x.real(); }

    static Complex inverse(const Complex& x) {
        if (x == 0.0) throw std::domain_error("division by zero scalar");
        return 1.0 / x;
    }

    static Complex inv_sqrt(const Complex& norm_sq) {
        if (std::sqrt(std::abs(norm_sq)) <= kNumericRankTolerance)
            throw std::domain_error("cannot normalize the zero state");
        return 1.0 / std::sqrt(norm_sq.real());
    }

    static bool rank_zero(const Complex& norm_sq) {
        return std::sqrt(std::abs(norm_sq)) <= kNumericRankTolerance;
    }

    static std::string str(const Complex& x) {
        std::ostringstream os;
        os.precision(17);
        if (x.imag() == 0.0) {
            os << x.real();
        } else {
            os << "(" << x.real() << (x.imag() < 0 ? " - " : " + ") << std::abs(x.imag()) << "i)";
        }
        return os.str();
    }
};

}  // namespace teleport
