#pragma once

#include "teleport/ket.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace teleport {

enum class BellKind : std::uint8_t { phi_plus, phi_minus, psi_plus, psi_minus };

/// Total exchange symmetry of an extended Bell vector. `none` marks the
/// polarization-only basis used for distinguishable particles.
enum class ExchangeSymmetry : std::uint8_t { none, symmetric, antisymmetric };

inline constexpr std::array<BellKind, 4> kBellKinds = {BellKind::phi_plus, BellKind::phi_minus,
                                                       BellKind::psi_plus, BellKind::psi_minus};

struct BellLabel {
    BellKind kind = BellKind::phi_plus;
    ExchangeSymmetry symmetry = ExchangeSymmetry::none;

    friend constexpr auto operator<=>(const BellLabel&, const BellLabel&) = default;

    /// "φ+_S", "ψ-_A", "ψ-".
    std::string str() const;
};

/// The four polarization-only labels.
std::vector<BellLabel> polarization_labels();

/// The eight extended labels: the four symmetric ones, then the four antisymmetric ones.
std::vector<BellLabel> extended_labels();

/// +1 for φ±, ψ+; -1 for the singlet ψ-.
int polarization_parity(BellKind kind);

/// Parity of the spatial factor under exchange; for extended labels this is
/// polarization parity times total parity.
int spatial_parity(const BellLabel& label);

/// (|00⟩ ± |11⟩)/√2 or (|01⟩ ± |10⟩)/√2 on two polarization-only particles.
template <class T>
BasicState<T> bell_pol(BellKind kind) {
    using Tr = ScalarTraits<T>;
    const Location none = Location::none();
    const bool phi = kind == BellKind::phi_plus || kind == BellKind::phi_minus;
    const bool plus = kind == BellKind::phi_plus || kind == BellKind::psi_plus;
    const T h = Tr::from(QRoot(0, Rational(1, 2)));  // 1/√2
    BasicState<T> out(2);
    const std::uint8_t first = phi ? 0 : 1;
    out.add(BasisKet{{{0, none}, {first, none}}}, h);
    out.add(BasisKet{{{1, none}, {static_cast<std::uint8_t>(1 - first), none}}}, plus ? h : -h);
    return out;
}

/// ½ (polarization pair) ⊗ (|XY⟩ ± |YX⟩), with the spatial sign chosen so that
/// the whole vector has the requested exchange symmetry.
template <class T>
BasicState<T> bell_extended(BellKind kind, ExchangeSymmetry symmetry, Location x, Location y) {
    using Tr = ScalarTraits<T>;
    if (symmetry == ExchangeSymmetry::none)
        throw std::invalid_argument("extended Bell vector needs a definite exchange symmetry");
    if (x == y) throw std::invalid_argument("extended Bell vector needs two distinct locations");
    const bool phi = kind == BellKind::phi_plus || kind == BellKind::phi_minus;
    const int pol_sign = (kind == BellKind::phi_plus || kind == BellKind::psi_plus) ? 1 : -1;
    const int space_sign = spatial_parity(BellLabel{kind, symmetry});

    struct Term {
        std::uint8_t p1, p2;
        int sign;
    };
    const Term pol[2] = {{0, static_cast<std::uint8_t>(phi ? 0 : 1), 1},
                         {1, static_cast<std::uint8_t>(phi ? 1 : 0), pol_sign}};
    const std::pair<Location, Location> space[2] = {{x, y}, {y, x}};
    const int space_signs[2] = {1, space_sign};

    BasicState<T> out(2);
    for (const auto& p : pol) {
        for (int s = 0; s < 2; ++s) {
            const int sign = p.sign * space_signs[s];
            BasisKet k{{{p.p1, space[s].first}, {p.p2, space[s].second}}};
            out.add(k, Tr::from(QRoot::fraction(sign, 2)));
        }
    }
    return out;
}

template <class T>
BasicState<T> bell_vector(const BellLabel& label, Location x = loc::A, Location y = loc::B) {
    if (label.symmetry == ExchangeSymmetry::none) return bell_pol<T>(label.kind);
    return bell_extended<T>(label.kind, label.symmetry, x, y);
}

/// Places a two-particle state on slots (i, j) and `rest` on the remaining
/// slots in increasing order.
template <class T>
BasicState<T> embed_pair(const BasicState<T>& pair, std::size_t i, std::size_t j, const BasicState<T>& rest) {
    if (pair.particles() != 2) throw std::invalid_argument("embed_pair needs a two-particle state");
    const std::size_t n = rest.particles() + 2;
    if (i >= n || j >= n || i == j) throw std::invalid_argument("embed_pair slots out of range");
    BasicState<T> out(n);
    for (const auto& [kp, ap] : pair.terms()) {
        for (const auto& [kr, ar] : rest.terms()) {
            BasisKet k;
            k.slots.resize(n);
            k.slots[i] = kp[0];
            k.slots[j] = kp[1];
            std::size_t r = 0;
            for (std::size_t s = 0; s < n; ++s)
                if (s != i && s != j) k.slots[s] = kr[r++];
            out.add(k, ap * ar);
        }
    }
    return out;
}

/// Expansion of a state in a Bell basis on slots (first, second):
/// x = Σ_label bell(label)_{first,second} ⊗ residuals[label].
template <class T>
struct PairDecomposition {
    std::size_t first = 0, second = 1;
    Location loc_x = loc::A, loc_y = loc::B;
    std::map<BellLabel, BasicState<T>> residuals;

    const BasicState<T>& residual(const BellLabel& label) const { return residuals.at(label); }
};

namespace detail {

inline BasisKet without_slots(const BasisKet& k, std::size_t i, std::size_t j) {
    BasisKet rest;
    for (std::size_t s = 0; s < k.size(); ++s)
        if (s != i && s != j) rest.slots.push_back(k[s]);
    return rest;
}

inline bool in_sector(const BasisKet& k, std::size_t i, std::size_t j, Location x, Location y) {
    const Location a = k[i].location, b = k[j].location;
    return (a == x && b == y) || (a == y && b == x);
}

[[noreturn]] void throw_sector_violation(const std::string& what, const std::vector<std::string>& kets);

}  // namespace detail

/// Coefficients ⟨bell(label)|x⟩ on slots (i, j) for every Bell label.
///
/// If slots i and j carry no location in any ket, the polarization basis is
/// used. Otherwise each ket must hold one of the two particles at x and the
/// other at y, and the eight extended vectors are used.
template <class T>
PairDecomposition<T> decompose_pair(const BasicState<T>& x, std::size_t i, std::size_t j,
                                    Location loc_x = loc::A, Location loc_y = loc::B) {
    using Tr = ScalarTraits<T>;
    if (i == j || i >= x.particles() || j >= x.particles())
        throw std::invalid_argument("decompose_pair slots out of range");

    bool polarization_only = !x.is_zero();
    for (const auto& [k, a] : x.terms())
        if (!k[i].location.is_none() || !k[j].location.is_none()) polarization_only = false;

    std::vector<std::string> offending;
    if (!polarization_only)
        for (const auto& [k, a] : x.terms())
            if (!detail::in_sector(k, i, j, loc_x, loc_y)) offending.push_back(k.str());
    if (!offending.empty())
        detail::throw_sector_violation(std::string("particles ") + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + " outside the {" + loc_x.symbol +
                                           "," + loc_y.symbol + "} sector",
                                       offending);

    PairDecomposition<T> out{i, j, loc_x, loc_y, {}};
    const auto labels = polarization_only ? polarization_labels() : extended_labels();
    for (const auto& label : labels) {
        const auto bell = bell_vector<T>(label, loc_x, loc_y);
        BasicState<T> residual(x.particles() - 2);
        for (const auto& [k, a] : x.terms()) {
            const T c = bell.amplitude(BasisKet{{k[i], k[j]}});
            if (Tr::negligible(c)) continue;
            residual.add(detail::without_slots(k, i, j), Tr::conj(c) * a);
        }
        out.residuals.emplace(label, std::move(residual));
    }
    return out;
}

template <class T>
BasicState<T> recombine(const PairDecomposition<T>& d) {
    std::size_t n = 2;
    if (!d.residuals.empty()) n = d.residuals.begin()->second.particles() + 2;
    BasicState<T> out(n);
    for (const auto& [label, residual] : d.residuals)
        out += embed_pair(bell_vector<T>(label, d.loc_x, d.loc_y), d.first, d.second, residual);
    return out;
}

/// Splits x by which pair of slots sits at {loc_x, loc_y} and decomposes each
/// part. Every ket must have exactly one particle at each of the two locations.
template <class T>
std::vector<PairDecomposition<T>> decompose_sectors(const BasicState<T>& x, Location loc_x = loc::A,
                                                    Location loc_y = loc::B) {
    std::map<std::pair<std::size_t, std::size_t>, BasicState<T>> sectors;
    std::vector<std::string> offending;
    for (const auto& [k, a] : x.terms()) {
        std::vector<std::size_t> at_x, at_y;
        for (std::size_t s = 0; s < k.size(); ++s) {
            if (k[s].location == loc_x) at_x.push_back(s);
            if (k[s].location == loc_y) at_y.push_back(s);
        }
        if (at_x.size() != 1 || at_y.size() != 1) {
            offending.push_back(k.str());
            continue;
        }
        const auto key = std::minmax(at_x[0], at_y[0]);
        auto [it, _] = sectors.try_emplace(key, BasicState<T>(x.particles()));
        it->second.add(k, a);
    }
    if (!offending.empty())
        detail::throw_sector_violation(std::string("kets without exactly one particle at each of ") +
                                           loc_x.symbol + "," + loc_y.symbol,
                                       offending);
    std::vector<PairDecomposition<T>> out;
    for (const auto& [pair, part] : sectors)
        out.push_back(decompose_pair(part, pair.first, pair.second, loc_x, loc_y));
    return out;
}

/// Orthogonal projector onto the span of a list of vectors.
///
/// Built by sequential Gram-Schmidt. The internal basis is kept orthogonal
/// but unnormalized, with each vector's inverse squared norm alongside, so
/// that the exact backend never needs a square root. A spanning vector whose
/// residual squared norm is zero (exactly, or below kNumericRankTolerance on
/// the numeric backend) is dropped.
template <class T>
class Projector {
public:
    explicit Projector(const std::vector<BasicState<T>>& vectors) {
        using Tr = ScalarTraits<T>;
        if (vectors.empty()) throw std::invalid_argument("projector needs at least one spanning vector");
        particles_ = vectors.front().particles();
        for (const auto& v : vectors) {
            if (v.particles() != particles_)
                throw std::invalid_argument("projector spanning vectors differ in particle count");
            BasicState<T> residual = v - apply(v);
            const T n2 = norm_sq(residual);
            if (Tr::rank_zero(n2)) continue;
            basis_.push_back(std::move(residual));
            inv_norm_sq_.push_back(Tr::inverse(n2));
        }
    }

    std::size_t rank() const { return basis_.size(); }
    std::size_t particles() const { return particles_; }
    const std::vector<BasicState<T>>& basis() const { return basis_; }

    BasicState<T> apply(const BasicState<T>& x) const {
        BasicState<T> out(x.particles());
        for (std::size_t b = 0; b < basis_.size(); ++b)
            out += basis_[b] * (inner(basis_[b], x) * inv_norm_sq_[b]);
        return out;
    }

private:
    std::size_t particles_ = 0;
    std::vector<BasicState<T>> basis_;
    std::vector<T> inv_norm_sq_;
};

template <class T>
Projector<T> subspace_projector(const std::vector<BasicState<T>>& vectors) {
    return Projector<T>(vectors);
}

}  // namespace teleport
