#include "teleport/bell.hpp"

#include <stdexcept>

namespace teleport {

std::string BellLabel::str() const {
    std::string out;
    switch (kind) {
        case BellKind::phi_plus: out = "φ+"; break;
        case BellKind::phi_minus: out = "φ-"; break;
        case BellKind::psi_plus: out = "ψ+"; break;
        case BellKind::psi_minus: out = "ψ-"; break;
    }
    if (symmetry == ExchangeSymmetry::symmetric) out += "_S";
    if (symmetry == ExchangeSymmetry::antisymmetric) out += "_A";
    return out;
}

std::vector<BellLabel> polarization_labels() {
    std::vector<BellLabel> out;
    for (BellKind k : kBellKinds) out.push_back({k, ExchangeSymmetry::none});
    return out;
}

std::vector<BellLabel> extended_labels() {
    std::vector<BellLabel> out;
    for (auto sym : {ExchangeSymmetry::symmetric, ExchangeSymmetry::antisymmetric})
        for (BellKind k : kBellKinds) out.push_back({k, sym});
    return out;
}

int polarization_parity(BellKind kind) { return kind == BellKind::psi_minus ? -1 : 1; }

int spatial_parity(const BellLabel& label) {
    switch (label.symmetry) {
        case ExchangeSymmetry::symmetric: return polarization_parity(label.kind);
        case ExchangeSymmetry::antisymmetric: return -polarization_parity(label.kind);
        case ExchangeSymmetry::none: break;
    }
    throw std::invalid_argument("polarization-only Bell label has no spatial factor");
}

namespace detail {

void throw_sector_violation(const std::string& what, const std::vector<std::string>& kets) {
    std::string msg = what + ":";
    for (const auto& k : kets) msg += " " + k;
    throw std::invalid_argument(msg);
}

}  // namespace detail

}  // namespace teleport
