#include "qtspin/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qtspin {

namespace {
const Complex kI{0.0, 1.0};
}

const CMatrix& pauli_x() {
    static const CMatrix m = (CMatrix(2, 2) << 0, 1, 1, 0).finished();
    return m;
}

const CMatrix& pauli_y() {
    static const CMatrix m = (CMatrix(2, 2) << 0, -kI, kI, 0).finished();
    return m;
}

const CMatrix& pauli_z() {
    static const CMatrix m = (CMatrix(2, 2) << 1, 0, 0, -1).finished();
    return m;
}

const CMatrix& identity2() {
    static const CMatrix m = CMatrix::Identity(2, 2);
    return m;
}

const CMatrix& sigma_plus() {
    static const CMatrix m = (CMatrix(2, 2) << 0, 2, 0, 0).finished();
    return m;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
    return m.rows() == m.cols() && max_abs_diff(m, m.adjoint()) <= tol;
}

DensityMatrix::DensityMatrix(CMatrix m, const Tolerances& tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    if (!is_hermitian(m_, tol.hermiticity))
        throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(m_.trace() - Complex{1.0, 0.0}) > tol.unit_trace)
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.positivity)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::invalid_argument("kron: inputs must be square");
    const Eigen::Index n = b.rows();
    CMatrix out(a.rows() * n, a.cols() * n);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * n, j * n, n, n) = a(i, j) * b;
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep,
                            const Tolerances& tol) {
    if (rho.dim() != 4)
        throw std::invalid_argument("partial_trace: expected a 4x4 density matrix");
    const CMatrix& m = rho.matrix();
    CMatrix out = CMatrix::Zero(2, 2);
    if (keep == Subsystem::Q) {
        for (int q = 0; q < 2; ++q)
            for (int qp = 0; qp < 2; ++qp)
                for (int s = 0; s < 2; ++s)
                    out(q, qp) += m(basis_index(q, s), basis_index(qp, s));
    } else {
        for (int s = 0; s < 2; ++s)
            for (int sp = 0; sp < 2; ++sp)
                for (int q = 0; q < 2; ++q)
                    out(s, sp) += m(basis_index(q, s), basis_index(q, sp));
    }
    return DensityMatrix(std::move(out), tol);
}

std::vector<double> herm_eigvals(const CMatrix& m, const Tolerances& tol) {
    if (!is_hermitian(m, tol.hermiticity))
        throw std::invalid_argument("herm_eigvals: input not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

CMatrix propagator(const CMatrix& h, double t, const Tolerances& tol) {
    if (!is_hermitian(h, tol.hermiticity))
        throw std::invalid_argument("propagator: Hamiltonian not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const auto& vals = es.eigenvalues();
    const CMatrix& vecs = es.eigenvectors();
    Eigen::VectorXcd phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k)
        phases(k) = std::exp(-kI * vals(k) * t);
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
    double s = 0.0;
    for (double lambda : herm_eigvals(rho.matrix(), tol)) {
        if (lambda < -tol.positivity)
            throw std::domain_error("von_neumann_entropy: negative eigenvalue");
        if (lambda <= 0.0) continue;
        s -= lambda * std::log(lambda);
    }
    return s;
}

} // namespace qtspin
