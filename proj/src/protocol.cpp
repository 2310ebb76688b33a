#include "teleport/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace teleport {

InputAmplitudes<Complex> numeric_input(Complex alpha, Complex beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
        throw std::invalid_argument("input state not normalized");
    return {alpha, beta};
}

std::string to_string(Pauli p) {
    switch (p) {
        case Pauli::identity: return "I";
        case Pauli::x: return "X";
        case Pauli::z: return "Z";
        case Pauli::zx: return "ZX";
    }
    return "?";
}

}  // namespace teleport
