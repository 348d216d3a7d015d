#include "qtspin/model.hpp"

#include <cmath>
#include <stdexcept>

namespace qtspin {

Temperature Temperature::finite(double value) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw std::invalid_argument("Temperature::finite: value must be > 0 and finite");
    return Temperature(Kind::Finite, value);
}

ThermalPopulations thermal_populations(double e2, Temperature temp) {
    if (!(e2 > 0.0) || !std::isfinite(e2))
        throw std::invalid_argument("thermal_populations: e2 must be > 0");
    switch (temp.kind()) {
        case Temperature::Kind::Zero:
            return {1.0, 0.0, 1.0};
        case Temperature::Kind::Infinite:
            return {0.5, 0.5, 2.0};
        case Temperature::Kind::Finite: {
            const double x = e2 / temp.value();
            // f00 = e^x / (e^x + e^-x) = 1/(1+e^-2x), stable for large x
            const double f00 = 1.0 / (1.0 + std::exp(-2.0 * x));
            const double z = std::exp(x) + std::exp(-x);
            return {f00, 1.0 - f00, z};
        }
    }
    throw std::logic_error("thermal_populations: unreachable");
}

CMatrix hamiltonian(const ModelParams& p) {
    if (!std::isfinite(p.e1) || !std::isfinite(p.e2) || !std::isfinite(p.j))
        throw std::invalid_argument("hamiltonian: parameters must be finite");
    CMatrix h = -p.e1 * kron(pauli_z(), identity2())
              - p.e2 * kron(identity2(), pauli_z())
              - p.j * kron(pauli_z(), pauli_z());
    if (p.coupling == CouplingKind::Heisenberg) {
        h -= p.j * (kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()));
    }
    return h;
}

DensityMatrix initial_state(const ThermalPopulations& pops) {
    CMatrix q(2, 2);
    q << 0.5, 0.5, 0.5, 0.5;
    CMatrix t = CMatrix::Zero(2, 2);
    t(0, 0) = pops.f00;
    t(1, 1) = pops.f11;
    return DensityMatrix(kron(q, t));
}

} // namespace qtspin
