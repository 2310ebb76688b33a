#include "teleport/ket.hpp"

#include <cmath>

namespace teleport {

std::string ParticleLabel::str() const {
    std::string out(1, static_cast<char>('0' + polarization));
    if (!location.is_none()) out += location.symbol;
    return out;
}

std::string BasisKet::str() const {
    std::string out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) out += ",";
        out += slots[i].str();
    }
    return out;
}

BasisKet BasisKet::parse(std::string_view text) {
    BasisKet ket;
    if (text.empty()) return ket;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string_view token = text.substr(start, end - start);
        if (token.empty() || token.size() > 2 || (token[0] != '0' && token[0] != '1'))
            throw std::invalid_argument("malformed basis ket: " + std::string(text));
        ParticleLabel label{static_cast<std::uint8_t>(token[0] - '0'), Location::none()};
        if (token.size() == 2) label.location = Location{token[1]};
        ket.slots.push_back(label);
        if (end == text.size()) break;
        start = end + 1;
    }
    return ket;
}

Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), std::size_t{0});
    return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
    Permutation p = identity(n);
    if (i >= n || j >= n) throw std::out_of_range("transposition slot out of range");
    std::swap(p.image[i], p.image[j]);
    return p;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(image.size(), false);
    for (std::size_t v : image) {
        if (v >= image.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

BasisKet Permutation::apply(const BasisKet& ket) const {
    BasisKet out;
    out.slots.resize(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i) out.slots[image[i]] = ket.slots[i];
    return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    return out;
}

bool equal_up_to_phase(const State& x, const State& y) {
    if (x.particles() != y.particles() || x.size() != y.size()) return false;
    if (x.is_zero()) return true;
    for (auto ix = x.terms().begin(), iy = y.terms().begin(); ix != x.terms().end(); ++ix, ++iy)
        if (!(ix->first == iy->first)) return false;

    // Candidate ratio from the leading monomial of the first amplitude.
    const auto& [ket, ay] = *y.terms().begin();
    const Amp& ax = x.terms().begin()->second;
    const Monomial& lead = ay.terms().begin()->first;
    const QRoot ratio = ax.coefficient(lead) / ay.terms().begin()->second;
    if (!(ratio * ratio == QRoot(1))) return false;
    return x == y * Amp(ratio);
}

bool equal_up_to_phase(const NumericState& x, const NumericState& y, double tol) {
    if (x.particles() != y.particles()) return false;
    const double ny2 = norm_sq(y).real();
    if (ny2 <= tol * tol) return std::sqrt(norm_sq(x).real()) <= tol;
    const Complex ratio = inner(y, x) / ny2;
    if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
    return max_abs_difference(x, y * ratio) <= tol;
}

NumericState evaluate(const State& x, Complex alpha, Complex beta) {
    NumericState out(x.particles());
    for (const auto& [k, a] : x.terms()) out.add(k, amp_eval(a, alpha, beta));
    return out;
}

double max_abs_difference(const NumericState& x, const NumericState& y) {
    double worst = 0.0;
    for (const auto& [k, a] : x.terms()) worst = std::max(worst, std::abs(a - y.amplitude(k)));
    for (const auto& [k, a] : y.terms()) worst = std::max(worst, std::abs(x.amplitude(k) - a));
    return worst;
}

}  // namespace teleport
