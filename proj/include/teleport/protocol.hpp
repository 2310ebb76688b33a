#pragma once

#include "teleport/bell.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace teleport {

/// Amplitudes of the polarization state α|0⟩ + β|1⟩ to be teleported.
template <class T>
struct InputAmplitudes {
    T alpha, beta;
};

inline InputAmplitudes<Amp> symbolic_input() { return {Amp::alpha(), Amp::beta()}; }

/// Throws std::invalid_argument("input state not normalized") off the unit sphere.
InputAmplitudes<Complex> numeric_input(Complex alpha, Complex beta);

/// Single-qubit correction sent to the receiver. `zx` applies X, then Z.
enum class Pauli : std::uint8_t { identity, x, z, zx };

inline constexpr std::array<Pauli, 4> kPaulis = {Pauli::identity, Pauli::x, Pauli::z, Pauli::zx};

std::string to_string(Pauli p);

template <class T>
BasicState<T> apply_pauli(const BasicState<T>& x, std::size_t slot, Pauli p) {
    BasicState<T> out(x.particles());
    for (const auto& [k, a] : x.terms()) {
        BasisKet moved = k;
        T amp = a;
        if (p == Pauli::x || p == Pauli::zx) moved[slot].polarization ^= 1;
        if ((p == Pauli::z || p == Pauli::zx) && moved[slot].polarization == 1) amp = -amp;
        out.add(moved, amp);
    }
    return out;
}

/// α|0,at⟩ + β|1,at⟩; pass Location::none() for a polarization-only qubit.
template <class T>
BasicState<T> make_input(const InputAmplitudes<T>& in, Location at = loc::A) {
    BasicState<T> out(1);
    out.add(BasisKet{{{0, at}}}, in.alpha);
    out.add(BasisKet{{{1, at}}}, in.beta);
    return out;
}

/// ½(|01⟩ - |10⟩)(|BC⟩ - |CB⟩): singlet polarization, antisymmetric spatial part.
template <class T>
BasicState<T> make_channel(Location first = loc::B, Location second = loc::C) {
    using Tr = ScalarTraits<T>;
    BasicState<T> out(2);
    for (std::uint8_t p = 0; p < 2; ++p) {
        const T pol = p == 0 ? Tr::one() : -Tr::one();  // |01⟩ - |10⟩
        const auto p1 = p, p2 = static_cast<std::uint8_t>(1 - p);
        out.add(BasisKet{{{p1, first}, {p2, second}}}, Tr::from(QRoot::fraction(1, 2)) * pol);
        out.add(BasisKet{{{p1, second}, {p2, first}}}, -Tr::from(QRoot::fraction(1, 2)) * pol);
    }
    return out;
}

/// One branch of a Bell measurement on particles 1, 2.
template <class T>
struct Outcome {
    BellLabel label;
    T probability;
    BasicState<T> post_state;  // normalized state of particle 3
    std::optional<Pauli> correction;
};

/// Distinguishable, polarization-only teleportation with a singlet channel.
template <class T>
std::vector<Outcome<T>> bennett_run(const InputAmplitudes<T>& in) {
    using Tr = ScalarTraits<T>;
    const auto input = make_input(in, Location::none());
    const auto channel = bell_pol<T>(BellKind::psi_minus);
    const auto initial = tensor(input, channel);
    const auto target = make_input(in, Location::none());
    const auto d = decompose_pair(initial, 0, 1);

    std::vector<Outcome<T>> out;
    for (const auto& [label, residual] : d.residuals) {
        Outcome<T> o{label, norm_sq(residual), BasicState<T>(1), std::nullopt};
        Tr::require_constant(o.probability, "outcome probability");
        o.post_state = normalize(residual);
        for (Pauli p : kPaulis) {
            if (equal_up_to_phase(apply_pauli(o.post_state, 0, p), target)) {
                o.correction = p;
                break;
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

/// Input photon at A next to the channel pair; only the pair is symmetric.
template <class T>
BasicState<T> build_naive(const InputAmplitudes<T>& in) {
    return tensor(make_input(in), make_channel<T>());
}

/// The same three photons, symmetrized over all particles and all degrees of freedom.
template <class T>
BasicState<T> build_symmetric(const InputAmplitudes<T>& in) {
    return symmetrize(build_naive(in));
}

/// Spanning vectors of the coincidence subspace for a beamsplitter fed at
/// (in1, in2): spatially antisymmetric Bell pairs on every slot pair, times
/// every basis state of the remaining slots.
template <class T>
std::vector<BasicState<T>> coincidence_vectors(std::size_t particles, Location in1, Location in2,
                                               const std::vector<Location>& elsewhere,
                                               bool include_antisymmetric) {
    if (particles < 2) throw std::invalid_argument("coincidence needs at least two particles");

    std::vector<BellLabel> labels;
    for (const auto& label : extended_labels()) {
        if (spatial_parity(label) != -1) continue;
        if (label.symmetry == ExchangeSymmetry::antisymmetric && !include_antisymmetric) continue;
        labels.push_back(label);
    }

    std::vector<ParticleLabel> single;
    for (Location l : elsewhere)
        for (std::uint8_t p = 0; p < 2; ++p) single.push_back({p, l});
    std::vector<BasicState<T>> rests{BasicState<T>::unit()};
    for (std::size_t r = 0; r + 2 < particles; ++r) {
        std::vector<BasicState<T>> next;
        for (const auto& s : rests)
            for (const auto& lab : single) next.push_back(tensor(s, BasicState<T>::basis(BasisKet{{lab}})));
        rests = std::move(next);
    }

    std::vector<BasicState<T>> out;
    for (std::size_t i = 0; i < particles; ++i)
        for (std::size_t j = i + 1; j < particles; ++j)
            for (const auto& label : labels) {
                const auto bell = bell_extended<T>(label.kind, label.symmetry, in1, in2);
                for (const auto& rest : rests) out.push_back(embed_pair(bell, i, j, rest));
            }
    return out;
}

template <class T>
struct CoincidenceResult {
    T probability;
    BasicState<T> collapsed;
    std::size_t subspace_rank = 0;
    bool includes_nonphysical = false;  // totally antisymmetric pair vectors were admitted
};

/// Joint detection behind a beamsplitter fed at (in1, in2).
///
/// A pair exits through different ports iff its spatial state is
/// antisymmetric. For inputs that are not totally symmetric the antisymmetric
/// extended vectors are admitted to the coincidence subspace as well.
template <class T>
CoincidenceResult<T> coincidence_measure(const BasicState<T>& x, Location in1, Location in2) {
    using Tr = ScalarTraits<T>;
    if (x.is_zero()) throw std::domain_error("cannot measure the zero state");
    std::set<Location> elsewhere;
    std::vector<std::string> offending;
    for (const auto& [k, a] : x.terms()) {
        int n1 = 0, n2 = 0;
        for (const auto& label : k.slots) {
            if (label.location == in1) ++n1;
            else if (label.location == in2) ++n2;
            else elsewhere.insert(label.location);
        }
        if (n1 != 1 || n2 != 1) offending.push_back(k.str());
    }
    if (!offending.empty())
        detail::throw_sector_violation(std::string("coincidence needs exactly one particle at each of ") +
                                           in1.symbol + "," + in2.symbol,
                                       offending);

    const bool symmetric = is_totally_symmetric(x);
    const Projector<T> projector(coincidence_vectors<T>(
        x.particles(), in1, in2, std::vector<Location>(elsewhere.begin(), elsewhere.end()), !symmetric));
    const auto projected = projector.apply(x);
    CoincidenceResult<T> out{norm_sq(projected), BasicState<T>(x.particles()), projector.rank(), !symmetric};
    Tr::require_constant(out.probability, "coincidence probability");
    if (projected.is_zero()) throw std::domain_error("outcome impossible");
    out.collapsed = normalize(projected);
    return out;
}

/// 2×2 conditional polarization state, indexed by polarization (0, 1).
template <class T>
struct DensityMatrix2 {
    std::array<std::array<T, 2>, 2> entries{};

    T& operator()(int p, int q) { return entries[p][q]; }
    const T& operator()(int p, int q) const { return entries[p][q]; }

    T trace() const { return ScalarTraits<T>::canonical(entries[0][0] + entries[1][1]); }

    bool is_hermitian() const {
        using Tr = ScalarTraits<T>;
        return Tr::negligible(Tr::canonical(entries[1][0] - Tr::conj(entries[0][1]))) &&
               Tr::negligible(Tr::canonical(entries[0][0] - Tr::conj(entries[0][0]))) &&
               Tr::negligible(Tr::canonical(entries[1][1] - Tr::conj(entries[1][1])));
    }
};

/// Polarization state of whichever particle sits at `at`.
///
/// Kets are grouped by everything except that particle's polarization (its
/// slot included); each group contributes |v⟩⟨v| and the result is divided
/// by its trace.
template <class T>
DensityMatrix2<T> conditional_at(const BasicState<T>& x, Location at) {
    using Tr = ScalarTraits<T>;
    std::map<BasisKet, std::array<T, 2>> groups;
    std::vector<std::string> offending;
    for (const auto& [k, a] : x.terms()) {
        std::size_t count = 0, slot = 0;
        for (std::size_t s = 0; s < k.size(); ++s)
            if (k[s].location == at) ++count, slot = s;
        if (count != 1) {
            offending.push_back(k.str());
            continue;
        }
        BasisKet key = k;
        key[slot].polarization = 0;
        auto [it, inserted] = groups.try_emplace(key, std::array<T, 2>{Tr::zero(), Tr::zero()});
        it->second[k[slot].polarization] = a;
    }
    if (!offending.empty())
        detail::throw_sector_violation(std::string("kets without exactly one particle at ") + at.symbol,
                                       offending);

    DensityMatrix2<T> rho;
    for (auto& row : rho.entries) row = {Tr::zero(), Tr::zero()};
    for (const auto& [key, v] : groups)
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) rho(p, q) += v[p] * Tr::conj(v[q]);
    const T inv_trace = Tr::inverse(rho.trace());
    for (auto& row : rho.entries)
        for (auto& e : row) e = Tr::canonical(e * inv_trace);
    return rho;
}

/// ⟨χ|ρ|χ⟩ for χ = α|0⟩ + β|1⟩.
template <class T>
T fidelity(const DensityMatrix2<T>& rho, const InputAmplitudes<T>& in) {
    using Tr = ScalarTraits<T>;
    const T chi[2] = {in.alpha, in.beta};
    T sum = Tr::zero();
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) sum += Tr::conj(chi[p]) * rho(p, q) * chi[q];
    return Tr::canonical(sum);
}

}  // namespace teleport
