#pragma once

// Random generators and brute-force oracles shared by the test suites.
// The oracles deliberately avoid the library's own Bell/projector code paths.

#include "teleport/protocol.hpp"

#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

namespace testing {

using namespace teleport;

inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return Rational(num(rng), den(rng));
}

inline QRoot random_qroot(std::mt19937_64& rng) {
    return QRoot(random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng));
}

/// Small QRoot drawn from {0, ±1/2, ±1, ±√2, ±√3/6, ...} so products stay readable.
inline QRoot random_small_qroot(std::mt19937_64& rng) {
    static const QRoot pool[] = {QRoot(1), QRoot(-1), QRoot::fraction(1, 2), QRoot::fraction(-1, 3),
                                 QRoot::sqrt2(), QRoot(0, 0, Rational(1, 6)), QRoot(2, 0, 0, -1)};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
    return pool[pick(rng)];
}

/// Random polynomial with up to `terms` monomials of degree <= max_degree.
inline Amp random_amp(std::mt19937_64& rng, int terms = 4, int max_degree = 3) {
    std::uniform_int_distribution<int> exp(0, max_degree);
    Amp out;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int budget = max_degree;
        for (auto& e : m.exponents) {
            const int k = std::min(budget, exp(rng) / 2);
            e = static_cast<std::uint8_t>(k);
            budget -= k;
        }
        out += Amp(m, random_qroot(rng));
    }
    return out;
}

/// Degree <= 1 amplitude: c0 + c1·α + c2·β.
inline Amp random_linear_amp(std::mt19937_64& rng) {
    return Amp(random_small_qroot(rng)) + Amp::alpha() * Amp(random_small_qroot(rng)) +
           Amp::beta() * Amp(random_small_qroot(rng));
}

/// Random sparse n-particle state over polarizations {0,1} and locations {A,B,C}.
inline State random_state(std::mt19937_64& rng, std::size_t n, int kets = 4, bool symbolic = true) {
    std::uniform_int_distribution<int> pol(0, 1), where(0, 2);
    const Location locs[] = {loc::A, loc::B, loc::C};
    State out(n);
    for (int t = 0; t < kets; ++t) {
        BasisKet k;
        for (std::size_t s = 0; s < n; ++s)
            k.slots.push_back({static_cast<std::uint8_t>(pol(rng)), locs[where(rng)]});
        out.add(k, symbolic ? random_linear_amp(rng) : Amp(random_small_qroot(rng)));
    }
    return out;
}

/// Random state restricted to the sector "one particle at A, one at B, one at C".
inline State random_abc_state(std::mt19937_64& rng, int kets = 5) {
    std::uniform_int_distribution<int> pol(0, 1);
    const auto perms = all_permutations(3);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    State out(3);
    for (int t = 0; t < kets; ++t) {
        BasisKet k{{{static_cast<std::uint8_t>(pol(rng)), loc::A},
                    {static_cast<std::uint8_t>(pol(rng)), loc::B},
                    {static_cast<std::uint8_t>(pol(rng)), loc::C}}};
        out.add(perms[pick(rng)].apply(k), Amp(random_small_qroot(rng)));
    }
    return out;
}

inline InputAmplitudes<Complex> random_input(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Complex a(g(rng), g(rng)), b(g(rng), g(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

// -- dense oracle over the 3-particle space -------------------------------
// Index of slot label (p, L) is p + 2·L with L ∈ {A,B,C}; a 3-particle ket
// maps to i0 + 6·i1 + 36·i2 (216 entries).

inline std::size_t dense_label(const ParticleLabel& l) {
    return l.polarization + 2 * static_cast<std::size_t>(l.location.symbol - 'A');
}

inline std::vector<Complex> dense(const NumericState& x) {
    std::vector<Complex> v(216);
    for (const auto& [k, a] : x.terms()) v[dense_label(k[0]) + 6 * dense_label(k[1]) + 36 * dense_label(k[2])] += a;
    return v;
}

/// Exact rank of a Gram matrix by Gaussian elimination over Q(√2,√3).
inline std::size_t gram_rank(const std::vector<State>& vectors) {
    const std::size_t n = vectors.size();
    std::vector<std::vector<QRoot>> g(n, std::vector<QRoot>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto c = amp_reduce(inner(vectors[i], vectors[j])).constant();
            REQUIRE(c.has_value());
            g[i][j] = *c;
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && g[pivot][col].is_zero()) ++pivot;
        if (pivot == n) continue;
        std::swap(g[pivot], g[rank]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || g[r][col].is_zero()) continue;
            const QRoot f = g[r][col] / g[rank][col];
            for (std::size_t c = col; c < n; ++c) g[r][c] -= f * g[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace testing
