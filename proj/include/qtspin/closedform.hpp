// Direct evaluators for the closed-form expressions of the model: the full
// and reduced density matrices, entropies and transverse spin components for
// both couplings. Deliberately independent of the numerical propagator so
// the audit module can compare the two routes; a misprint in a formula
// surfaces as an audit finding, never as a silent test failure.

#ifndef QTSPIN_CLOSEDFORM_HPP
#define QTSPIN_CLOSEDFORM_HPP

#include "qtspin/linalg.hpp"
#include "qtspin/model.hpp"

namespace qtspin {

enum class EntropyOf { Qubit, Thermal };

// W^2 = E12^2 + 4 J^2 with E12 = e1 - e2; the effective precession
// frequency of the Heisenberg coupling.
struct HeisenbergAux {
    double e12 = 0.0;
    double w = 0.0;

    static HeisenbergAux from(const ModelParams& p);
};

// X = sqrt(1 - 4 f00 f11 sin^2(2Jt)); |<sigma_+>| for the Ising coupling
// and the eigenvalue gap of the reduced qubit state.
double ising_coherence_factor(const ThermalPopulations& pops, double j, double t);

// Full 4x4 Ising solution: diagonals frozen at their initial values,
// coherences rho02 and rho13 rotating at 2(e1+j) and 2(e1-j).
DensityMatrix ising_density(const ModelParams& p, const ThermalPopulations& pops,
                            double t);

// keep=Q: (1/2)[[1, a],[a*, 1]] with a = f00 e^{2i(e1+j)t} + f11 e^{2i(e1-j)t};
// keep=T: diag(f00, f11) for all t.
DensityMatrix ising_reduced(const ModelParams& p, const ThermalPopulations& pops,
                            double t, Subsystem keep);

// Qubit: S1(t) = (X/2) ln((1-X)/(1+X)) - (1/2) ln(f00 f11 sin^2(2Jt)),
// with the limit value 0 returned near the degenerate points sin(2Jt) = 0
// (and at zero temperature). Thermal: -(f00 ln f00 + f11 ln f11), constant.
double ising_entropy(const ThermalPopulations& pops, double j, double t,
                     EntropyOf which);

// <sigma_+> = f00 e^{-2i(e1+j)t} + f11 e^{-2i(e1-j)t}; |<sigma_+>|^2 = X^2.
Complex ising_sigma_plus(const ModelParams& p, const ThermalPopulations& pops,
                         double t);

// Full 4x4 Heisenberg solution (upper triangle as printed, Hermitian
// completion below; rho03 = 0).
DensityMatrix heis_density(const ModelParams& p, const ThermalPopulations& pops,
                           double t);

// Reduced matrices a_ij (keep=Q) and b_ij (keep=T), evaluated literally.
DensityMatrix heis_reduced(const ModelParams& p, const ThermalPopulations& pops,
                           double t, Subsystem keep);

// Auxiliary amplitudes of the Heisenberg entropy expressions.
double heis_x2(const ModelParams& p, const ThermalPopulations& pops, double t);
double heis_y1(const ModelParams& p, const ThermalPopulations& pops, double t);
double heis_x1(const ModelParams& p, const ThermalPopulations& pops, double t);

// Literal evaluation: Qubit -> (X1/2) ln((1-X1)/(1+X1)) - (1/2) ln(Y1);
// Thermal -> ln 2 - (1/2) ln(1-X2^2) + X2 ln((1-X2)/(1+X2)).
double heis_entropy(const ModelParams& p, const ThermalPopulations& pops,
                    double t, EntropyOf which);

// Same thermal expression with the coefficient (1/2) on the X2 ln term,
// i.e. the generic two-level entropy with eigenvalues (1 +/- X2)/2.
double heis_thermal_entropy_repaired(const ModelParams& p,
                                     const ThermalPopulations& pops, double t);

// The printed transverse-component expression, taken literally.
Complex heis_sigma_plus(const ModelParams& p, const ThermalPopulations& pops,
                        double t);

// Reference value 2*conj(a01): <sigma_+> = Tr{sigma_+ rho_1} = 2 rho_1(1,0)
// under the fixed basis convention.
Complex heis_sigma_plus_from_reduced(const ModelParams& p,
                                     const ThermalPopulations& pops, double t);

} // namespace qtspin

#endif // QTSPIN_CLOSEDFORM_HPP
