#pragma once

#include "teleport/scalar.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace teleport {

/// Spatial region. Distinct symbols are orthogonal; the null symbol marks a
/// particle that carries polarization only.
struct Location {
    char symbol = '\0';

    static constexpr Location none() { return Location{}; }
    constexpr bool is_none() const { return symbol == '\0'; }

    friend constexpr auto operator<=>(const Location&, const Location&) = default;
};

namespace loc {
inline constexpr Location A{'A'};
inline constexpr Location B{'B'};
inline constexpr Location C{'C'};
}  // namespace loc

/// Single-particle basis state |p, L⟩.
struct ParticleLabel {
    std::uint8_t polarization = 0;
    Location location;

    friend constexpr auto operator<=>(const ParticleLabel&, const ParticleLabel&) = default;

    /// "0A", or just "1" for a polarization-only particle.
    std::string str() const;
};

/// Product ket; slot i holds particle i.
struct BasisKet {
    std::vector<ParticleLabel> slots;

    std::size_t size() const { return slots.size(); }
    const ParticleLabel& operator[](std::size_t i) const { return slots[i]; }
    ParticleLabel& operator[](std::size_t i) { return slots[i]; }

    friend auto operator<=>(const BasisKet&, const BasisKet&) = default;
    friend bool operator==(const BasisKet&, const BasisKet&) = default;

    /// "0A,1B,1C". The map order on kets agrees with lexicographic order on these strings.
    std::string str() const;

    /// Inverse of str(); throws std::invalid_argument on malformed text.
    static BasisKet parse(std::string_view text);
};

/// Bijection on slots: the particle in slot i moves to slot image[i].
struct Permutation {
    std::vector<std::size_t> image;

    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

    std::size_t size() const { return image.size(); }
    bool is_valid() const;
    BasisKet apply(const BasisKet& ket) const;
};

/// All n! permutations in lexicographic order of their image vectors.
std::vector<Permutation> all_permutations(std::size_t n);

/// Sparse N-particle state: map from basis ket to amplitude, zeros never stored.
template <class T>
class BasicState {
public:
    using Scalar = T;
    using Traits = ScalarTraits<T>;
    using Terms = std::map<BasisKet, T>;

    explicit BasicState(std::size_t particles = 0) : particles_(particles) {}

    /// The 0-particle state with amplitude one: identity for tensor().
    static BasicState unit() {
        BasicState s(0);
        s.add(BasisKet{}, Traits::one());
        return s;
    }

    static BasicState basis(BasisKet ket, const T& amplitude = Traits::one()) {
        BasicState s(ket.size());
        s.add(ket, amplitude);
        return s;
    }

    std::size_t particles() const { return particles_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    T amplitude(const BasisKet& ket) const {
        auto it = terms_.find(ket);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    void add(const BasisKet& ket, const T& amplitude) {
        if (ket.size() != particles_)
            throw std::invalid_argument("basis ket " + ket.str() + " has wrong particle count");
        auto it = terms_.find(ket);
        T sum = Traits::canonical(it == terms_.end() ? amplitude : it->second + amplitude);
        if (Traits::negligible(sum)) {
            if (it != terms_.end()) terms_.erase(it);
        } else if (it == terms_.end()) {
            terms_.emplace(ket, std::move(sum));
        } else {
            it->second = std::move(sum);
        }
    }

    BasicState& operator+=(const BasicState& other) {
        require_same_size(other);
        for (const auto& [k, a] : other.terms_) add(k, a);
        return *this;
    }
    BasicState& operator-=(const BasicState& other) {
        require_same_size(other);
        for (const auto& [k, a] : other.terms_) add(k, -a);
        return *this;
    }
    BasicState& operator*=(const T& scale) {
        BasicState out(particles_);
        for (const auto& [k, a] : terms_) out.add(k, a * scale);
        return *this = std::move(out);
    }

    friend BasicState operator+(BasicState x, const BasicState& y) { return x += y; }
    friend BasicState operator-(BasicState x, const BasicState& y) { return x -= y; }
    friend BasicState operator*(BasicState x, const T& s) { return x *= s; }
    friend BasicState operator*(const T& s, BasicState x) { return x *= s; }
    friend BasicState operator-(BasicState x) { return x *= -Traits::one(); }

    friend bool operator==(const BasicState& x, const BasicState& y) {
        return x.particles_ == y.particles_ && x.terms_ == y.terms_;
    }

private:
    void require_same_size(const BasicState& other) const {
        if (other.particles_ != particles_)
            throw std::invalid_argument("particle count mismatch: " + std::to_string(particles_) +
                                        " vs " + std::to_string(other.particles_));
    }

    std::size_t particles_;
    Terms terms_;
};

using State = BasicState<Amp>;
using NumericState = BasicState<Complex>;

/// Tensor product; y's particles are appended after x's.
template <class T>
BasicState<T> tensor(const BasicState<T>& x, const BasicState<T>& y) {
    BasicState<T> out(x.particles() + y.particles());
    for (const auto& [kx, ax] : x.terms()) {
        for (const auto& [ky, ay] : y.terms()) {
            BasisKet k = kx;
            k.slots.insert(k.slots.end(), ky.slots.begin(), ky.slots.end());
            out.add(k, ax * ay);
        }
    }
    return out;
}

/// ⟨x|y⟩: conjugate-linear in x, reduced.
template <class T>
T inner(const BasicState<T>& x, const BasicState<T>& y) {
    using Tr = ScalarTraits<T>;
    if (x.particles() != y.particles())
        throw std::invalid_argument("inner product of states with different particle counts");
    T sum = Tr::zero();
    const auto& small = x.size() <= y.size() ? x : y;
    const auto& large = x.size() <= y.size() ? y : x;
    for (const auto& [k, a] : small.terms()) {
        auto it = large.terms().find(k);
        if (it == large.terms().end()) continue;
        const T& ax = (&small == &x) ? a : it->second;
        const T& ay = (&small == &x) ? it->second : a;
        sum += Tr::conj(ax) * ay;
    }
    return Tr::canonical(sum);
}

template <class T>
T norm_sq(const BasicState<T>& x) {
    return inner(x, x);
}

template <class T>
BasicState<T> permute(const BasicState<T>& x, const Permutation& pi) {
    if (pi.size() != x.particles() || !pi.is_valid())
        throw std::invalid_argument("permutation does not act on " + std::to_string(x.particles()) +
                                    " particles");
    BasicState<T> out(x.particles());
    for (const auto& [k, a] : x.terms()) out.add(pi.apply(k), a);
    return out;
}

/// Unnormalized symmetrizer Π = (1/N!) Σ_π P_π. Idempotent.
template <class T>
BasicState<T> symmetric_projection(const BasicState<T>& x) {
    using Tr = ScalarTraits<T>;
    const auto perms = all_permutations(x.particles());
    BasicState<T> sum(x.particles());
    for (const auto& pi : perms) sum += permute(x, pi);
    return sum * Tr::from(QRoot::fraction(1, static_cast<long>(perms.size())));
}

/// Scales x to unit norm, keeping its global phase.
template <class T>
BasicState<T> normalize(const BasicState<T>& x) {
    using Tr = ScalarTraits<T>;
    if (x.is_zero()) throw std::domain_error("cannot normalize the zero state");
    return x * Tr::inv_sqrt(norm_sq(x));
}

/// Normalized totally symmetric part of x.
template <class T>
BasicState<T> symmetrize(const BasicState<T>& x) {
    auto projected = symmetric_projection(x);
    if (projected.is_zero()) throw std::domain_error("state has no symmetric component");
    return normalize(projected);
}

/// Invariance under every slot permutation (up to the pruning tolerance on the numeric backend).
template <class T>
bool is_totally_symmetric(const BasicState<T>& x) {
    for (const auto& pi : all_permutations(x.particles()))
        if (!(permute(x, pi) - x).is_zero()) return false;
    return true;
}

/// True iff x = c·y for a unit-modulus constant c.
bool equal_up_to_phase(const State& x, const State& y);
bool equal_up_to_phase(const NumericState& x, const NumericState& y, double tol = 1e-10);

/// Numeric image of an exact state at the given input amplitudes.
NumericState evaluate(const State& x, Complex alpha, Complex beta);

/// Largest amplitude difference over the union of supports.
double max_abs_difference(const NumericState& x, const NumericState& y);

/// Canonical (ket, amplitude) listing, sorted lexicographically by ket.
template <class T>
std::vector<std::pair<std::string, std::string>> listing(const BasicState<T>& x) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, a] : x.terms()) out.emplace_back(k.str(), ScalarTraits<T>::str(a));
    return out;
}

/// Builds a state from (ket text, amplitude) pairs, e.g. {{"0A,1B", a}, ...}.
template <class T>
BasicState<T> make_state(std::size_t particles, const std::vector<std::pair<std::string, T>>& terms) {
    BasicState<T> out(particles);
    for (const auto& [text, a] : terms) out.add(BasisKet::parse(text), a);
    return out;
}

}  // namespace teleport
