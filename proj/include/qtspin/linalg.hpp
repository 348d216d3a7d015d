// Dense complex matrix kernel for the two-spin problem: tensor products,
// partial traces, Hermitian eigendecomposition, unitary propagators and
// eigenvalue-based von Neumann entropy.
//
// Basis convention (global, shared by every module): the joint index is
// i = 2*q + s, where q is the qubit (Q-spin) level and s the thermal
// (T-spin) level; level 0 is the sigma_z = +1 eigenstate.

#ifndef QTSPIN_LINALG_HPP
#define QTSPIN_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qtspin {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Default numeric tolerances, ~100x double round-off for 4x4 problems.
struct Tolerances {
    double hermiticity = 1e-12;
    double unit_trace = 1e-12;
    double positivity = 1e-10;
    double reconstruction = 1e-10;
};

enum class Subsystem { Q, T };

constexpr int basis_index(int q, int s) { return 2 * q + s; }

const CMatrix& pauli_x();
const CMatrix& pauli_y();
const CMatrix& pauli_z();
const CMatrix& identity2();
// sigma_+ = sigma_x + i sigma_y; single entry 2 at (0,1), so <sigma_+> = 2*rho(1,0).
const CMatrix& sigma_plus();

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool is_hermitian(const CMatrix& m, double tol);

// Complex Hermitian, unit-trace, positive-semidefinite matrix with the
// basis convention above attached. Construction validates the invariants.
class DensityMatrix {
public:
    explicit DensityMatrix(CMatrix m, const Tolerances& tol = {});

    const CMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

private:
    CMatrix m_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep,
                            const Tolerances& tol = {});

// Real spectrum in ascending order. Rejects non-Hermitian input.
std::vector<double> herm_eigvals(const CMatrix& m, const Tolerances& tol = {});

// U(t) = exp(-i h t) via Hermitian eigendecomposition; result is unitary.
CMatrix propagator(const CMatrix& h, double t, const Tolerances& tol = {});

// S = -sum lambda_i ln(lambda_i), in nats, with 0 ln 0 = 0 and eigenvalues
// in [-positivity, 0) clamped to zero.
double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = {});

} // namespace qtspin

#endif // QTSPIN_LINALG_HPP
