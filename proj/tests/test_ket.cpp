#include "support.hpp"

#include <cmath>
#include <set>

using namespace teleport;
using testing::random_state;

namespace {

const Amp a = Amp::alpha(), b = Amp::beta();
Amp q(long num, long den) { return Amp(QRoot::fraction(num, den)); }

State ket(const char* text) { return State::basis(BasisKet::parse(text)); }

}  // namespace

TEST_SUITE("ket") {

TEST_CASE("basis ket text round trip") {
    const auto k = BasisKet::parse("0A,1B,1C");
    CHECK(k.size() == 3);
    CHECK(k[1].polarization == 1);
    CHECK(k[1].location == loc::B);
    CHECK(k.str() == "0A,1B,1C");
    CHECK(BasisKet::parse("1,0").str() == "1,0");
    CHECK(BasisKet::parse("1,0")[0].location.is_none());
    CHECK_THROWS_AS(BasisKet::parse("2A"), std::invalid_argument);
    CHECK_THROWS_AS(BasisKet::parse("0A,,1B"), std::invalid_argument);
}

TEST_CASE("tensor") {
    const auto three = tensor(make_input(symbolic_input()), make_channel<Amp>());
    CHECK(three.particles() == 3);
    CHECK(three.size() == 8);
    const auto want = make_state<Amp>(3, {{"0A,0B,1C", q(1, 2) * a},
                                          {"0A,1B,0C", q(-1, 2) * a},
                                          {"0A,0C,1B", q(-1, 2) * a},
                                          {"0A,1C,0B", q(1, 2) * a},
                                          {"1A,0B,1C", q(1, 2) * b},
                                          {"1A,1B,0C", q(-1, 2) * b},
                                          {"1A,0C,1B", q(-1, 2) * b},
                                          {"1A,1C,0B", q(1, 2) * b}});
    CHECK(three == want);

    const State x = ket("0A") * a + ket("1B") * b;
    CHECK(tensor(x, State::unit()) == x);
    CHECK(tensor(State::unit(), x) == x);
    CHECK(tensor(ket("0A"), ket("1B")) == ket("0A,1B"));
}

TEST_CASE("inner products") {
    CHECK(inner(bell_pol<Amp>(BellKind::psi_minus), bell_pol<Amp>(BellKind::psi_plus)) == Amp());
    const auto in = make_input(symbolic_input());
    CHECK(inner(in, in) == Amp(1));
    CHECK(amp_reduce(a.conj() * a + b.conj() * b) == Amp(1));
    CHECK(inner(ket("0A,1B"), ket("1B,0A")) == Amp());
    CHECK(inner(ket("0A") * a, ket("0A")) == a.conj());
    CHECK_THROWS_AS(inner(ket("0A"), ket("0A,0B")), std::invalid_argument);
}

TEST_CASE("permute") {
    const auto swap = Permutation::transposition(2, 0, 1);
    CHECK(permute(ket("0A,1B"), swap) == ket("1B,0A"));
    const auto channel = make_channel<Amp>();
    CHECK(permute(channel, swap) == channel);
    std::mt19937_64 rng(3);
    const auto x = random_state(rng, 3);
    CHECK(permute(x, Permutation::identity(3)) == x);
    CHECK_THROWS_AS(permute(x, Permutation{{0, 0, 1}}), std::invalid_argument);
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("symmetrize") {
    CHECK(symmetrize(ket("0A,0A,0A")) == ket("0A,0A,0A"));
    const State singlet_same_place = ket("0A,1A") - ket("1A,0A");
    CHECK_THROWS_WITH_AS(symmetrize(singlet_same_place), "state has no symmetric component", std::domain_error);
    CHECK(symmetric_projection(singlet_same_place).is_zero());
}

TEST_CASE("symmetrize the three-photon state: brute-force ket count and magnitude") {
    // Oracle: sum the 6 permuted copies of each of the 8 kets by hand and
    // merge; at (α,β)=(1,0) the 4 α kets spread over distinct orderings.
    const auto naive = build_naive(symbolic_input());
    std::map<BasisKet, Amp> merged;
    for (const auto& pi : all_permutations(3))
        for (const auto& [k, amp] : naive.terms()) merged[pi.apply(k)] += amp;
    std::size_t nonzero = 0;
    for (const auto& [k, amp] : merged) nonzero += !amp.is_zero();

    const auto sym = build_symmetric(symbolic_input());
    CHECK(nonzero == 24);
    CHECK(sym.size() == 24);
    const QRoot mag(0, 0, Rational(1, 6));  // 1/√12
    for (const auto& [k, amp] : sym.terms()) {
        const bool on_alpha = amp == Amp::alpha() * Amp(mag) || amp == Amp::alpha() * Amp(-mag);
        const bool on_beta = amp == Amp::beta() * Amp(mag) || amp == Amp::beta() * Amp(-mag);
        CHECK((on_alpha || on_beta));
    }
    const auto at_pole = evaluate(sym, 1.0, 0.0);
    CHECK(at_pole.size() == 12);
    for (const auto& [k, amp] : at_pole.terms()) CHECK(std::abs(std::abs(amp) - 1.0 / std::sqrt(12.0)) < 1e-14);
}

TEST_CASE("normalize") {
    CHECK(normalize(ket("0A") * Amp(2)) == ket("0A"));
    const auto two = normalize(ket("0A,1B") + ket("1B,0A"));
    for (const auto& [k, amp] : two.terms()) CHECK(amp == Amp(QRoot(0, Rational(1, 2))));
    const auto projected = symmetric_projection(build_naive(symbolic_input()));
    CHECK(amp_reduce(norm_sq(projected)) == q(1, 3));
    CHECK(normalize(projected) == build_symmetric(symbolic_input()));
    CHECK_THROWS_WITH_AS(normalize(State(1)), "cannot normalize the zero state", std::domain_error);
    const State unnormalizable = ket("0A") * a;
    CHECK_THROWS_AS(normalize(unnormalizable), std::domain_error);
    try {
        normalize(unnormalizable);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("norm depends on free symbols") == 0);
    }
}

TEST_CASE("equal up to global phase") {
    CHECK(equal_up_to_phase(ket("0C") * -a - ket("1C") * b, ket("0C") * a + ket("1C") * b));
    CHECK_FALSE(equal_up_to_phase(ket("0A"), ket("1A")));
    const State x = ket("0C") * a + ket("1C") * b;
    CHECK_FALSE(equal_up_to_phase(x, x * Amp(2)));
    CHECK_FALSE(equal_up_to_phase(x, ket("0C") * a - ket("1C") * b));
    CHECK(equal_up_to_phase(x, x));

    const auto nx = evaluate(x, Complex(0.6, 0.0), Complex(0.0, 0.8));
    CHECK(equal_up_to_phase(nx, nx * Complex(0.0, 1.0)));
    CHECK(equal_up_to_phase(nx, nx * std::polar(1.0, 0.7)));
    CHECK_FALSE(equal_up_to_phase(nx, nx * Complex(2.0)));
}

TEST_CASE("symmetrizer is idempotent and its image invariant (100 random states)") {
    std::mt19937_64 rng(11);
    const auto perms = all_permutations(3);
    for (int t = 0; t < 100; ++t) {
        const auto x = random_state(rng, 3, 5);
        const auto p = symmetric_projection(x);
        REQUIRE(symmetric_projection(p) == p);
        for (const auto& pi : perms) REQUIRE(permute(p, pi) == p);
        if (!p.is_zero() && amp_reduce(norm_sq(p)).constant()) {
            // the normalized image is invariant as well, when it exists in this field
            try {
                const auto s = symmetrize(x);
                for (const auto& pi : perms) REQUIRE(permute(s, pi) == s);
            } catch (const std::domain_error&) {
            }
        }
    }
}

TEST_CASE("permutations are unitary and inner products conjugate-symmetric") {
    std::mt19937_64 rng(12);
    const auto perms = all_permutations(3);
    for (int t = 0; t < 100; ++t) {
        const auto x = random_state(rng, 3, 6), y = random_state(rng, 3, 6);
        const Amp xy = inner(x, y);
        REQUIRE(xy == amp_reduce(inner(y, x).conj()));
        for (const auto& pi : perms) REQUIRE(inner(permute(x, pi), permute(y, pi)) == xy);
    }
}

TEST_CASE("exact inner products agree with the numeric pipeline (100 inputs)") {
    std::mt19937_64 rng(13);
    const auto naive = build_naive(symbolic_input());
    const auto sym = build_symmetric(symbolic_input());
    const auto x = random_state(rng, 3, 8);
    for (int t = 0; t < 100; ++t) {
        const auto in = testing::random_input(rng);
        const auto nn = build_naive(in), ns = build_symmetric(in), nx = evaluate(x, in.alpha, in.beta);
        REQUIRE(max_abs_difference(evaluate(sym, in.alpha, in.beta), ns) <= 1e-12);
        for (const auto& [e1, n1] : {std::pair{&naive, &nn}, std::pair{&sym, &ns}}) {
            REQUIRE(std::abs(amp_eval(inner(*e1, x), in.alpha, in.beta) - inner(*n1, nx)) <= 1e-12);
            REQUIRE(std::abs(amp_eval(inner(*e1, sym), in.alpha, in.beta) - inner(*n1, ns)) <= 1e-12);
        }
    }
}

TEST_CASE("canonical listing is sorted by ket text") {
    const auto rows = listing(build_symmetric(symbolic_input()));
    REQUIRE(rows.size() == 24);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].first < rows[i].first);
    CHECK(rows.front().first == "0A,0B,1C");
}

TEST_CASE("particle count mismatch is an error") {
    State x(2);
    CHECK_THROWS_AS(x.add(BasisKet::parse("0A"), Amp(1)), std::invalid_argument);
    CHECK_THROWS_AS(ket("0A") + ket("0A,0B"), std::invalid_argument);
}

}
