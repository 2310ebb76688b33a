#include "teleport/report.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace teleport {

namespace {

constexpr double kTol = 1e-12;

// Lifts exact expectations into the backend under test and compares.
template <class T>
struct Context;

template <>
struct Context<Amp> {
    InputAmplitudes<Amp> in = symbolic_input();

    Amp lift(const Amp& x) const { return amp_reduce(x); }
    State lift(const State& x) const { return x; }
    bool same(const Amp& a, const Amp& b) const { return amp_reduce(a - b).is_zero(); }
    bool same(const State& a, const State& b) const { return a == b; }
    double value(const Amp& a) const {
        auto c = amp_reduce(a).constant();
        return c ? c->to_double() : std::numeric_limits<double>::quiet_NaN();
    }
};

template <>
struct Context<Complex> {
    InputAmplitudes<Complex> in;

    Complex lift(const Amp& x) const { return amp_eval(x, in.alpha, in.beta); }
    NumericState lift(const State& x) const { return evaluate(x, in.alpha, in.beta); }
    bool same(const Complex& a, const Complex& b) const { return std::abs(a - b) <= kTol; }
    bool same(const NumericState& a, const NumericState& b) const { return max_abs_difference(a, b) <= kTol; }
    double value(const Complex& a) const { return a.real(); }
};

// Inline form for small states, a ket count otherwise.
template <class T>
std::string brief(const BasicState<T>& x) {
    if (x.is_zero()) return "0";
    if (x.size() > 4) return std::to_string(x.size()) + " kets";
    std::string out;
    for (const auto& [ket, amp] : listing(x)) {
        if (!out.empty()) out += " + ";
        out += "(" + amp + ")|" + ket + "⟩";
    }
    return out;
}

class Recorder {
public:
    explicit Recorder(Report& report) : report_(report) {}

    void check(std::string name, std::string ref, std::string expected, std::string actual, bool pass) {
        report_.checks.push_back({std::move(name), std::move(ref), std::move(expected), std::move(actual), pass});
    }

    template <class T>
    void scalar(const Context<T>& ctx, std::string name, std::string ref, const T& expected, const T& actual) {
        using Tr = ScalarTraits<T>;
        check(std::move(name), std::move(ref), Tr::str(expected), Tr::str(actual), ctx.same(expected, actual));
    }

    template <class T>
    void state(const Context<T>& ctx, std::string name, std::string ref, const BasicState<T>& expected,
               const BasicState<T>& actual) {
        check(std::move(name), std::move(ref), brief(expected), brief(actual), ctx.same(expected, actual));
    }

    template <class T>
    void probability(const Context<T>& ctx, std::string name, const T& p) {
        report_.probabilities.push_back({std::move(name), ScalarTraits<T>::str(p), ctx.value(p)});
    }

    template <class T>
    void fidelity(const Context<T>& ctx, const T& f) {
        report_.fidelity = ReportedScalar{"fidelity at C", ScalarTraits<T>::str(f), ctx.value(f)};
    }

    template <class T>
    void listing(std::string name, const BasicState<T>& s) {
        report_.states.push_back({std::move(name), teleport::listing(s)});
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

private:
    Report& report_;
};

// Conditional particle state that each Bell outcome leaves behind, before correction:
// φ+ → -β|0⟩ + α|1⟩, φ- → β|0⟩ + α|1⟩, ψ+ → -α|0⟩ + β|1⟩, ψ- → -α|0⟩ - β|1⟩.
State outcome_pattern(BellKind kind, Location at) {
    const Amp a = Amp::alpha(), b = Amp::beta();
    Amp c0, c1;
    switch (kind) {
        case BellKind::phi_plus: c0 = -b, c1 = a; break;
        case BellKind::phi_minus: c0 = b, c1 = a; break;
        case BellKind::psi_plus: c0 = -a, c1 = b; break;
        case BellKind::psi_minus: c0 = -a, c1 = -b; break;
    }
    State out(1);
    out.add(BasisKet{{{0, at}}}, c0);
    out.add(BasisKet{{{1, at}}}, c1);
    return out;
}

Pauli expected_correction(BellKind kind) {
    switch (kind) {
        case BellKind::phi_plus: return Pauli::zx;
        case BellKind::phi_minus: return Pauli::x;
        case BellKind::psi_plus: return Pauli::z;
        case BellKind::psi_minus: return Pauli::identity;
    }
    return Pauli::identity;
}

std::string pair_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

/// (1/(2√2)) Σ over pairs (1,2), (1,3) of the spatially antisymmetric extended
/// vectors times their outcome pattern at C.
State expected_naive_collapse() {
    State out(3);
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}})
        for (const auto& label : extended_labels())
            if (spatial_parity(label) == -1)
                out += embed_pair(bell_vector<Amp>(label), i, j, outcome_pattern(label.kind, loc::C));
    return out * Amp(QRoot(0, Rational(1, 4)));
}

/// (1/√3) Σ over all pairs of ψ-_S ⊗ (α|0C⟩ + β|1C⟩), written with a plus sign.
State symmetric_manifold_printed() {
    State chi = make_input(symbolic_input(), loc::C);
    State out(3);
    const auto singlet = bell_extended<Amp>(BellKind::psi_minus, ExchangeSymmetry::symmetric, loc::A, loc::B);
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}})
        out += embed_pair(singlet, i, j, chi);
    return out * Amp(QRoot(0, 0, Rational(1, 3)));
}

template <class T>
BasicState<T> measurement_complement(const BasicState<T>& x, Location in1, Location in2) {
    const Projector<T> p(coincidence_vectors<T>(x.particles(), in1, in2, {loc::C}, !is_totally_symmetric(x)));
    return x - p.apply(x);
}

}  // namespace

std::vector<InputAmplitudes<Complex>> fixed_sample_points() {
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<InputAmplitudes<Complex>> pts = {{1.0, 0.0}, {0.0, 1.0}, {h, h}, {h, -h}};
    // 16 more on a (θ, φ) grid of the Bloch sphere
    for (int t = 1; t <= 4; ++t) {
        for (int f = 0; f < 4; ++f) {
            const double theta = t * std::numbers::pi / 10.0, phi = f * std::numbers::pi / 2.0 + 0.3;
            pts.push_back({std::cos(theta), std::polar(std::sin(theta), phi)});
        }
    }
    return pts;
}

namespace {

// -- scenarios -------------------------------------------------------------

template <class T>
void bennett_checks(const Context<T>& ctx, Recorder& rec, std::uint64_t seed) {
    const char* ref = "Bell-measurement outcomes for distinguishable qubits";
    const auto outcomes = bennett_run(ctx.in);
    const auto target = make_input(ctx.in, Location::none());
    T total = ScalarTraits<T>::zero();
    for (const auto& o : outcomes) {
        const std::string name = o.label.str();
        rec.scalar(ctx, "P(" + name + ") = 1/4", ref, ctx.lift(Amp(QRoot::fraction(1, 4))), o.probability);
        rec.state(ctx, "post-state after " + name, ref, ctx.lift(outcome_pattern(o.label.kind, Location::none())),
                  o.post_state);
        const Pauli want = expected_correction(o.label.kind);
        const bool recovers = o.correction && equal_up_to_phase(apply_pauli(o.post_state, 0, *o.correction), target);
        rec.check("correction after " + name + " recovers the input", ref, to_string(want),
                  o.correction ? to_string(*o.correction) : "none", recovers && *o.correction == want);
        rec.probability(ctx, "P(" + name + ")", o.probability);
        rec.listing("particle 3 after " + name, o.post_state);
        total += o.probability;
    }
    rec.scalar(ctx, "outcome probabilities sum to 1", ref, ScalarTraits<T>::one(), ScalarTraits<T>::canonical(total));

    const auto initial = tensor(make_input(ctx.in, Location::none()), bell_pol<T>(BellKind::psi_minus));
    const auto d = decompose_pair(initial, 0, 1);
    bool expansion = true;
    for (const auto& [label, residual] : d.residuals)
        expansion = expansion && ctx.same(residual, ctx.lift(outcome_pattern(label.kind, Location::none())) *
                                                        ctx.lift(Amp(QRoot::fraction(1, 2))));
    rec.check("Bell expansion of input ⊗ singlet", ref, "½ Σ bell ⊗ pattern", expansion ? "matches" : "differs",
              expansion);

    // Random inputs through the numeric pipeline.
    double worst = 0.0;
    bool ok = true;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto in = haar_sample(seed, i);
        const auto tgt = make_input(in, Location::none());
        for (const auto& o : bennett_run(in)) {
            worst = std::max(worst, std::abs(o.probability - 0.25));
            ok = ok && o.correction && *o.correction == expected_correction(o.label.kind) &&
                 equal_up_to_phase(apply_pauli(o.post_state, 0, *o.correction), tgt, kTol);
        }
    }
    std::ostringstream os;
    os << "max |P - 1/4| = " << worst;
    rec.check("100 random inputs: corrections recover the input to 1e-12", ref, "all recovered",
              ok ? os.str() : "failure", ok && worst <= kTol);
}

template <class T>
void naive_checks(const Context<T>& ctx, Recorder& rec) {
    const char* ref_init = "three-photon state with distinguishable input photon";
    const char* ref_dec = "pairwise extended-Bell expansion of the three-photon state";
    const char* ref_col = "coincidence collapse of the partially symmetrized state";
    const auto naive = build_naive(ctx.in);

    rec.scalar(ctx, "initial state is normalized", ref_init, ScalarTraits<T>::one(), norm_sq(naive));
    rec.check("initial state has 8 kets", ref_init, "8", std::to_string(naive.size()), naive.size() == 8);
    rec.check("initial state invariant under swapping particles 2,3", ref_init, "true",
              (permute(naive, Permutation::transposition(3, 1, 2)) - naive).is_zero() ? "true" : "false",
              (permute(naive, Permutation::transposition(3, 1, 2)) - naive).is_zero());

    const auto sectors = decompose_sectors(naive);
    rec.check("A,B occupied by particle pairs (1,2) and (1,3)", ref_dec, "(1,2),(1,3)",
              sectors.size() == 2 ? pair_name(sectors[0].first, sectors[0].second) + "," +
                                        pair_name(sectors[1].first, sectors[1].second)
                                  : std::to_string(sectors.size()) + " sectors",
              sectors.size() == 2 && sectors[0].first == 0 && sectors[0].second == 1 && sectors[1].first == 0 &&
                  sectors[1].second == 2);
    BasicState<T> rebuilt(3);
    for (const auto& d : sectors) {
        for (const auto& [label, residual] : d.residuals) {
            const auto want = ctx.lift(outcome_pattern(label.kind, loc::C) * Amp(QRoot::fraction(1, 4)));
            rec.state(ctx, "coefficient of " + label.str() + " on particles " + pair_name(d.first, d.second), ref_dec, want,
                      residual);
        }
        rebuilt += recombine(d);
    }
    rec.state(ctx, "recombining the decomposition reproduces the initial state", ref_dec, naive, rebuilt);

    const auto m = coincidence_measure(naive, loc::A, loc::B);
    rec.probability(ctx, "coincidence", m.probability);
    rec.scalar(ctx, "coincidence probability = 1/2", ref_col, ctx.lift(Amp(QRoot::fraction(1, 2))), m.probability);
    rec.check("coincidence subspace admits nonphysical antisymmetric vectors", ref_col, "true",
              m.includes_nonphysical ? "true" : "false", m.includes_nonphysical);
    rec.state(ctx, "collapsed state equals the 1/(2√2) antisymmetric-spatial manifold", ref_col,
              ctx.lift(expected_naive_collapse()), m.collapsed);

    bool only_antisym = true;
    for (const auto& d : decompose_sectors(m.collapsed))
        for (const auto& [label, residual] : d.residuals)
            if (spatial_parity(label) == 1 && !residual.is_zero()) only_antisym = false;
    rec.check("only spatially antisymmetric pair kets survive", ref_col, "true", only_antisym ? "true" : "false",
              only_antisym);

    const auto complement = measurement_complement(naive, loc::A, loc::B);
    rec.scalar(ctx, "P + |(1-P)x|² = |x|²", ref_col, norm_sq(naive),
               ScalarTraits<T>::canonical(m.probability + norm_sq(complement)));

    const auto rho = conditional_at(m.collapsed, loc::C);
    const T f = fidelity(rho, ctx.in);
    rec.fidelity(ctx, f);
    const T half = ctx.lift(Amp(QRoot::fraction(1, 2)));
    rec.scalar(ctx, "conditional polarization at C is I/2 (0,0)", ref_col, half, rho(0, 0));
    rec.scalar(ctx, "conditional polarization at C is I/2 (0,1)", ref_col, ScalarTraits<T>::zero(), rho(0, 1));
    rec.scalar(ctx, "conditional polarization at C is I/2 (1,1)", ref_col, half, rho(1, 1));
    rec.scalar(ctx, "fidelity at C = 1/2 < 1", ref_col, half, f);

    double worst = 0.0;
    for (const auto& in : fixed_sample_points()) {
        const auto mm = coincidence_measure(build_naive(in), loc::A, loc::B);
        worst = std::max(worst, std::abs(fidelity(conditional_at(mm.collapsed, loc::C), in) - 0.5));
    }
    std::ostringstream os;
    os << "max |F - 1/2| = " << worst;
    rec.check("fidelity 1/2 at the 20 fixed sample points", ref_col, "|F - 1/2| <= 1e-12", os.str(), worst <= kTol);

    rec.listing("initial", naive);
    rec.listing("collapsed", m.collapsed);
}

template <class T>
void symmetric_checks(const Context<T>& ctx, Recorder& rec) {
    const char* ref_sym = "full exchange symmetrization";
    const char* ref_exp = "pairwise symmetric-Bell expansion, prefactor 1/√12";
    const char* ref_col = "coincidence measurement on the symmetrized state";
    const auto sym = build_symmetric(ctx.in);

    rec.scalar(ctx, "symmetrized state is normalized", ref_sym, ScalarTraits<T>::one(), norm_sq(sym));
    rec.check("symmetrized state has 24 kets", ref_sym, "24", std::to_string(sym.size()), sym.size() == 24);
    rec.check("invariant under all 6 permutations", ref_sym, "true", is_totally_symmetric(sym) ? "true" : "false",
              is_totally_symmetric(sym));

    const auto sectors = decompose_sectors(sym);
    rec.check("A,B occupied by all three particle pairs", ref_exp, "3", std::to_string(sectors.size()),
              sectors.size() == 3);
    const Amp inv_sqrt12(QRoot(0, 0, Rational(1, 6)));
    std::size_t nonzero = 0;
    for (const auto& d : sectors) {
        for (const auto& [label, residual] : d.residuals) {
            const bool symmetric = label.symmetry == ExchangeSymmetry::symmetric;
            if (!residual.is_zero()) ++nonzero;
            const auto want = symmetric ? ctx.lift(outcome_pattern(label.kind, loc::C) * inv_sqrt12)
                                        : BasicState<T>(1);
            rec.state(ctx, "coefficient of " + label.str() + " on particles " + pair_name(d.first, d.second), ref_exp, want,
                      residual);
        }
    }
    rec.check("12 nonzero pairwise Bell terms", ref_exp, "12", std::to_string(nonzero), nonzero == 12);
    rec.note("The second row of the pairwise expansion carries φ-_S on particle pairs (1,3) and (2,3) "
             "(coefficient α|1C⟩ + β|0C⟩), not φ+_S; both φ+_S and φ-_S appear on every pair.");

    const auto m = coincidence_measure(sym, loc::A, loc::B);
    rec.probability(ctx, "coincidence", m.probability);
    rec.scalar(ctx, "coincidence probability = 1/4", ref_col, ctx.lift(Amp(QRoot::fraction(1, 4))), m.probability);
    rec.check("coincidence subspace is physical (ψ-_S only)", ref_col, "false",
              m.includes_nonphysical ? "true" : "false", !m.includes_nonphysical);
    const auto printed = ctx.lift(symmetric_manifold_printed());
    rec.state(ctx, "collapsed state = -(1/√3) Σ ψ-_S ⊗ (α|0C⟩ + β|1C⟩)", ref_col, -printed, m.collapsed);
    rec.check("collapsed state equals the 1/√3 manifold up to global phase", ref_col, "true",
              equal_up_to_phase(m.collapsed, printed) ? "true" : "false", equal_up_to_phase(m.collapsed, printed));
    rec.note("The collapsed state carries an overall sign -1 relative to the manifold written with '+' "
             "(inherited from the -ψ-_S terms of the expansion); the sign is a global phase.");

    const auto complement = measurement_complement(sym, loc::A, loc::B);
    rec.scalar(ctx, "P + |(1-P)x|² = |x|²", ref_col, norm_sq(sym),
               ScalarTraits<T>::canonical(m.probability + norm_sq(complement)));

    const auto rho = conditional_at(m.collapsed, loc::C);
    const Amp a = Amp::alpha(), b = Amp::beta();
    const Amp pure[2][2] = {{a * a.conj(), a * b.conj()}, {b * a.conj(), b * b.conj()}};
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            rec.scalar(ctx, "conditional polarization at C (" + std::to_string(p) + "," + std::to_string(q) + ")",
                       ref_col, ctx.lift(pure[p][q]), rho(p, q));
    const T f = fidelity(rho, ctx.in);
    rec.fidelity(ctx, f);
    rec.scalar(ctx, "fidelity at C = 1", ref_col, ScalarTraits<T>::one(), f);

    rec.listing("symmetrized", sym);
    rec.listing("collapsed", m.collapsed);
}

template <class T>
void basis_checks(const Context<T>& ctx, Recorder& rec) {
    using Tr = ScalarTraits<T>;
    const char* ref_basis = "extended Bell vectors, symmetric and antisymmetric";
    const char* ref_dec = "product states in the extended Bell basis";
    const auto labels = extended_labels();

    std::size_t bad = 0;
    for (const auto& u : labels)
        for (const auto& v : labels) {
            const T g = inner(bell_vector<T>(u), bell_vector<T>(v));
            if (!ctx.same(g, u == v ? Tr::one() : Tr::zero())) ++bad;
        }
    rec.check("8x8 Gram matrix is the identity", ref_basis, "0 off entries", std::to_string(bad) + " off entries",
              bad == 0);

    std::size_t bad_pol = 0;
    for (const auto& u : polarization_labels())
        for (const auto& v : polarization_labels())
            if (!ctx.same(inner(bell_vector<T>(u), bell_vector<T>(v)), u == v ? Tr::one() : Tr::zero())) ++bad_pol;
    rec.check("4x4 polarization Bell Gram matrix is the identity", ref_basis, "0 off entries",
              std::to_string(bad_pol) + " off entries", bad_pol == 0);

    const auto swap = Permutation::transposition(2, 0, 1);
    for (const auto& label : labels) {
        const auto v = bell_vector<T>(label);
        const int want = label.symmetry == ExchangeSymmetry::symmetric ? 1 : -1;
        const auto swapped = permute(v, swap);
        const bool ok = ctx.same(swapped, want == 1 ? v : -v);
        rec.check("exchange eigenvalue of " + label.str(), ref_basis, std::to_string(want), ok ? std::to_string(want) : "?",
                  ok);
    }

    // Expected ½-coefficients per product state, in extended_labels() order (S block, then A block).
    struct Identity {
        const char* ket;
        int signs[4];  // φ+, φ-, ψ+, ψ-; repeated for S and A
    };
    const Identity identities[4] = {{"0A,0B", {1, 1, 0, 0}},
                                    {"0A,1B", {0, 0, 1, 1}},
                                    {"1A,0B", {0, 0, 1, -1}},
                                    {"1A,1B", {1, -1, 0, 0}}};
    for (const auto& id : identities) {
        const auto product = BasicState<T>::basis(BasisKet::parse(id.ket));
        const auto d = decompose_pair(product, 0, 1);
        bool ok = true;
        T completeness = Tr::zero();
        for (std::size_t l = 0; l < labels.size(); ++l) {
            const T c = d.residual(labels[l]).amplitude(BasisKet{});
            const T want = Tr::from(QRoot::fraction(id.signs[l % 4], 2));
            ok = ok && ctx.same(c, want);
            completeness += Tr::conj(c) * c;
        }
        ok = ok && ctx.same(recombine(d), product);
        rec.check(std::string("|") + id.ket + "⟩ = ½ Σ ± extended Bell vectors", ref_dec, "exact identity",
                  ok ? "exact identity" : "differs", ok);
        rec.scalar(ctx, std::string("completeness for |") + id.ket + "⟩", ref_dec, Tr::one(),
                   Tr::canonical(completeness));
    }

    const auto naive = build_naive(ctx.in);
    BasicState<T> rebuilt(3);
    for (const auto& d : decompose_sectors(naive)) rebuilt += recombine(d);
    rec.state(ctx, "decompose/recombine round trip on the three-photon state", ref_dec, naive, rebuilt);
}

void sweep_checks(const RunConfig& config, Recorder& rec) {
    const char* ref = "exact and numeric backends agree";
    const auto in = symbolic_input();
    const auto bennett = bennett_run(in);
    const auto naive = build_naive(in);
    const auto naive_m = coincidence_measure(naive, loc::A, loc::B);
    const auto naive_rho = conditional_at(naive_m.collapsed, loc::C);
    const auto naive_f = fidelity(naive_rho, in);
    const auto sym = build_symmetric(in);
    const auto sym_m = coincidence_measure(sym, loc::A, loc::B);
    const auto sym_rho = conditional_at(sym_m.collapsed, loc::C);
    const auto sym_f = fidelity(sym_rho, in);

    double worst = 0.0;
    auto track_scalar = [&](const Amp& exact, Complex numeric, const InputAmplitudes<Complex>& at) {
        worst = std::max(worst, std::abs(amp_eval(exact, at.alpha, at.beta) - numeric));
    };
    auto track_state = [&](const State& exact, const NumericState& numeric, const InputAmplitudes<Complex>& at) {
        worst = std::max(worst, max_abs_difference(evaluate(exact, at.alpha, at.beta), numeric));
    };
    auto track_rho = [&](const DensityMatrix2<Amp>& exact, const DensityMatrix2<Complex>& numeric,
                         const InputAmplitudes<Complex>& at) {
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) track_scalar(exact(p, q), numeric(p, q), at);
    };

    for (std::uint64_t i = 0; i < config.samples; ++i) {
        const auto at = haar_sample(config.seed, i);
        const auto nb = bennett_run(at);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            track_scalar(bennett[k].probability, nb[k].probability, at);
            track_state(bennett[k].post_state, nb[k].post_state, at);
        }
        const auto nn = build_naive(at);
        track_state(naive, nn, at);
        const auto nm = coincidence_measure(nn, loc::A, loc::B);
        track_scalar(naive_m.probability, nm.probability, at);
        track_state(naive_m.collapsed, nm.collapsed, at);
        const auto nrho = conditional_at(nm.collapsed, loc::C);
        track_rho(naive_rho, nrho, at);
        track_scalar(naive_f, fidelity(nrho, at), at);

        const auto ns = build_symmetric(at);
        track_state(sym, ns, at);
        const auto sm = coincidence_measure(ns, loc::A, loc::B);
        track_scalar(sym_m.probability, sm.probability, at);
        track_state(sym_m.collapsed, sm.collapsed, at);
        const auto srho = conditional_at(sm.collapsed, loc::C);
        track_rho(sym_rho, srho, at);
        track_scalar(sym_f, fidelity(srho, at), at);
    }
    std::ostringstream os;
    os.precision(3);
    os << worst;
    rec.check("max |exact - numeric| over " + std::to_string(config.samples) + " samples", ref, "< 1e-12", os.str(),
              worst < kTol);
    rec.probability(Context<Amp>{}, "symmetric coincidence", sym_m.probability);
    rec.probability(Context<Amp>{}, "naive coincidence", naive_m.probability);
}

template <class T>
void dispatch(Scenario s, const Context<T>& ctx, Recorder& rec, std::uint64_t seed) {
    switch (s) {
        case Scenario::bennett: bennett_checks(ctx, rec, seed); break;
        case Scenario::naive: naive_checks(ctx, rec); break;
        case Scenario::symmetric: symmetric_checks(ctx, rec); break;
        case Scenario::verify_bases: basis_checks(ctx, rec); break;
        case Scenario::sweep: break;
    }
}

nlohmann::ordered_json scalar_json(const ReportedScalar& s) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["exact"] = s.exact;
    if (std::isfinite(s.value)) j["value"] = s.value;
    else j["value"] = nullptr;
    return j;
}

}  // namespace

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::bennett: return "bennett";
        case Scenario::naive: return "naive";
        case Scenario::symmetric: return "symmetric";
        case Scenario::verify_bases: return "verify-bases";
        case Scenario::sweep: return "sweep";
    }
    return "?";
}

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "numeric"; }

std::optional<Scenario> parse_scenario(const std::string& name) {
    for (auto s : {Scenario::bennett, Scenario::naive, Scenario::symmetric, Scenario::verify_bases, Scenario::sweep})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

std::optional<std::string> validate(const RunConfig& config) {
    if (config.scenario == Scenario::sweep && config.backend != Backend::numeric)
        return "sweep requires the numeric backend";
    if (config.samples == 0) return "--samples must be positive";
    return std::nullopt;
}

bool Report::all_passed() const { return passed() == checks.size(); }

std::size_t Report::passed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass;
    return n;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = schema_version;
    j["scenario"] = scenario;
    j["backend"] = backend;
    j["seed"] = seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"paper_ref", c.paper_ref},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"pass", c.pass}});
    j["probabilities"] = nlohmann::ordered_json::array();
    for (const auto& p : probabilities) j["probabilities"].push_back(scalar_json(p));
    j["fidelity"] = fidelity ? scalar_json(*fidelity) : nlohmann::ordered_json();
    j["states"] = nlohmann::ordered_json::array();
    for (const auto& s : states) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [ket, amp] : s.terms) terms.push_back({{"ket", ket}, {"amplitude", amp}});
        j["states"].push_back({{"name", s.name}, {"terms", terms}});
    }
    j["notes"] = notes;
    j["summary"] = {{"passed", passed()}, {"total", checks.size()}};
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "scenario: " << scenario << "  backend: " << backend << "  seed: " << seed << "\n\n";
    for (const auto& c : checks)
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n       expected: " << c.expected
           << "  actual: " << c.actual << "  (" << c.paper_ref << ")\n";
    if (!probabilities.empty()) {
        os << "\nprobabilities:\n";
        for (const auto& p : probabilities) os << "  " << p.name << " = " << p.exact << "  (" << p.value << ")\n";
    }
    if (fidelity) os << "\n" << fidelity->name << " = " << fidelity->exact << "  (" << fidelity->value << ")\n";
    for (const auto& s : states) {
        os << "\nstate " << s.name << ":\n";
        for (const auto& [ket, amp] : s.terms) os << "  |" << ket << "⟩  " << amp << "\n";
    }
    if (!notes.empty()) {
        os << "\nnotes:\n";
        for (const auto& n : notes) os << "  - " << n << "\n";
    }
    os << "\n" << passed() << "/" << checks.size() << " checks passed\n";
    return os.str();
}

InputAmplitudes<Complex> haar_sample(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Complex a, b;
    do {
        a = {gauss(rng), gauss(rng)};
        b = {gauss(rng), gauss(rng)};
    } while (std::norm(a) + std::norm(b) == 0.0);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

Report run_scenario(const RunConfig& config) {
    Report report;
    report.scenario = to_string(config.scenario);
    report.backend = to_string(config.backend);
    report.seed = config.seed;
    Recorder rec(report);
    if (config.scenario == Scenario::sweep) {
        sweep_checks(config, rec);
    } else if (config.backend == Backend::exact) {
        dispatch(config.scenario, Context<Amp>{}, rec, config.seed);
    } else {
        dispatch(config.scenario, Context<Complex>{haar_sample(config.seed, 0)}, rec, config.seed);
    }
    return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (auto problem = validate(config)) {
        err << "usage error: " << *problem << "\n";
        return 2;
    }
    Report report;
    try {
        report = run_scenario(config);
    } catch (const std::exception& e) {
        err << "scenario error: " << e.what() << "\n";
        return 1;
    }
    if (config.format == OutputFormat::json) out << report.to_json().dump(2) << "\n";
    else out << report.to_text();
    return report.all_passed() ? 0 : 1;
}

}  // namespace teleport
