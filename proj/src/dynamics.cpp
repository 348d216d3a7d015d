#include "qtspin/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace qtspin {

TimeGrid::TimeGrid(double start, double end, int points)
    : t_start(start), t_end(end), n_points(points) {
    if (!(end > start) || !std::isfinite(start) || !std::isfinite(end))
        throw std::invalid_argument("TimeGrid: require t_end > t_start, both finite");
    if (points < 2)
        throw std::invalid_argument("TimeGrid: require n_points >= 2");
}

StateSeries evolve_exact(const CMatrix& h, const DensityMatrix& rho0,
                         const TimeGrid& grid, const Tolerances& tol) {
    StateSeries series;
    series.grid = grid;
    series.states.reserve(grid.n_points);
    for (int k = 0; k < grid.n_points; ++k) {
        const CMatrix u = propagator(h, grid.time(k), tol);
        series.states.emplace_back(u * rho0.matrix() * u.adjoint(), tol);
    }
    return series;
}

namespace {

CMatrix commutator_rhs(const CMatrix& h, const CMatrix& rho) {
    return Complex{0.0, -1.0} * (h * rho - rho * h);
}

} // namespace

StateSeries evolve_rk4(const CMatrix& h, const DensityMatrix& rho0,
                       const TimeGrid& grid, int substeps, const Tolerances& tol) {
    if (substeps < 1)
        throw std::invalid_argument("evolve_rk4: substeps must be >= 1");
    const double step = grid.dt() / substeps;
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("evolve_rk4: non-positive or non-finite step size");

    StateSeries series;
    series.grid = grid;
    series.states.reserve(grid.n_points);
    series.states.push_back(rho0);

    CMatrix rho = rho0.matrix();
    for (int k = 1; k < grid.n_points; ++k) {
        for (int s = 0; s < substeps; ++s) {
            const CMatrix k1 = commutator_rhs(h, rho);
            const CMatrix k2 = commutator_rhs(h, rho + 0.5 * step * k1);
            const CMatrix k3 = commutator_rhs(h, rho + 0.5 * step * k2);
            const CMatrix k4 = commutator_rhs(h, rho + step * k3);
            rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        rho = 0.5 * (rho + rho.adjoint().eval());
        const double tr = rho.trace().real();
        if (!std::isfinite(tr) || tr <= 0.0)
            throw std::runtime_error("evolve_rk4: non-finite or non-positive trace");
        rho /= tr;
        series.states.emplace_back(rho, tol);
    }
    return series;
}

} // namespace qtspin
