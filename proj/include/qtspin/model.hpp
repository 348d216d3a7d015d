// Problem definition: model parameters, Hamiltonian construction for the
// Ising and Heisenberg couplings, thermal populations and the joint
// initial state (qubit along +x, T-spin in a Boltzmann-diagonal state).
// Natural units throughout: hbar = k_B = 1.

#ifndef QTSPIN_MODEL_HPP
#define QTSPIN_MODEL_HPP

#include "qtspin/linalg.hpp"

namespace qtspin {

enum class CouplingKind { Ising, Heisenberg };

struct ModelParams {
    double e1 = 0.0;  // Zeeman energy of the Q-spin
    double e2 = 0.0;  // Zeeman energy of the T-spin
    double j = 0.0;   // coupling constant
    CouplingKind coupling = CouplingKind::Ising;

    // Flags the weak-qubit / strong-thermal-splitting window 0 <= e1 << j << e2,
    // operationally e1 <= j/10 and j <= e2/10.
    bool in_paper_regime() const {
        return e1 >= 0.0 && j > 0.0 && e1 <= j / 10.0 && j <= e2 / 10.0;
    }
};

class Temperature {
public:
    enum class Kind { Zero, Finite, Infinite };

    static Temperature zero() { return Temperature(Kind::Zero, 0.0); }
    static Temperature infinite() { return Temperature(Kind::Infinite, 0.0); }
    static Temperature finite(double value);

    Kind kind() const { return kind_; }
    double value() const { return value_; }  // meaningful only for Finite

private:
    Temperature(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

struct ThermalPopulations {
    double f00 = 1.0;  // ground-state weight, f00 >= f11
    double f11 = 0.0;
    double z = 1.0;    // partition function
};

// f00 = exp(+e2/T)/Z, f11 = exp(-e2/T)/Z, Z = exp(e2/T) + exp(-e2/T);
// zero and infinite temperature handled exactly.
ThermalPopulations thermal_populations(double e2, Temperature temp);

// Ising:       H = -e1 sz(x)I - e2 I(x)sz - j sz(x)sz   (diagonal)
// Heisenberg:  the Ising sz(x)sz term is replaced by -j (sx(x)sx + sy(x)sy + sz(x)sz),
//              adding the symmetric entries H(1,2) = H(2,1) = -2j.
CMatrix hamiltonian(const ModelParams& p);

// rho(0) = (uniform-superposition qubit) (x) diag(f00, f11).
DensityMatrix initial_state(const ThermalPopulations& pops);

} // namespace qtspin

#endif // QTSPIN_MODEL_HPP
