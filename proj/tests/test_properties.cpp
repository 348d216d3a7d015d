// Randomized property suites (1000+ cases each).

#include <doctest.h>

#include "qtspin/closedform.hpp"
#include "qtspin/dynamics.hpp"
#include "random_inputs.hpp"

#include <cmath>

using namespace qtspin;
using namespace qtspin::testing;

namespace {
constexpr int kCases = 1000;
}

TEST_CASE("kron: trace factorization and bilinearity") {
    Rng rng(101);
    for (int rep = 0; rep < kCases; ++rep) {
        const CMatrix a = random_hermitian(rng, 2);
        const CMatrix b = random_hermitian(rng, 2);
        const CMatrix c = random_hermitian(rng, 2);
        const double alpha = uniform(rng, -2.0, 2.0);

        CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
        CHECK(max_abs_diff(kron(a + alpha * c, b), kron(a, b) + alpha * kron(c, b))
              < 1e-12);
        CHECK(max_abs_diff(kron(a, b + alpha * c), kron(a, b) + alpha * kron(a, c))
              < 1e-12);
    }
}

TEST_CASE("kron is associative") {
    Rng rng(102);
    for (int rep = 0; rep < kCases; ++rep) {
        const CMatrix a = random_complex(rng, 2);
        const CMatrix b = random_complex(rng, 2);
        const CMatrix c = random_complex(rng, 2);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
    }
}

TEST_CASE("partial trace of product states factorizes") {
    Rng rng(103);
    for (int rep = 0; rep < kCases; ++rep) {
        const DensityMatrix a = random_density(rng, 2);
        const DensityMatrix b = random_density(rng, 2);
        const DensityMatrix joint(kron(a.matrix(), b.matrix()));
        CHECK(max_abs_diff(partial_trace(joint, Subsystem::Q).matrix(), a.matrix())
              < 1e-12);
        CHECK(max_abs_diff(partial_trace(joint, Subsystem::T).matrix(), b.matrix())
              < 1e-12);
    }
}

TEST_CASE("partial trace preserves unit trace and invariants") {
    Rng rng(104);
    for (int rep = 0; rep < kCases; ++rep) {
        const DensityMatrix rho = random_density(rng, 4);
        for (Subsystem keep : {Subsystem::Q, Subsystem::T}) {
            const DensityMatrix red = partial_trace(rho, keep);
            CHECK(std::abs(red.matrix().trace() - Complex{1.0, 0.0}) < 1e-12);
        }
    }
}

TEST_CASE("entropy is invariant under unitary conjugation") {
    Rng rng(105);
    for (int rep = 0; rep < kCases; ++rep) {
        const int dim = rep % 2 == 0 ? 2 : 4;
        const DensityMatrix rho = random_density(rng, dim);
        const CMatrix u = random_unitary(rng, dim);
        const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
        CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) < 1e-9);
    }
}

TEST_CASE("propagator is unitary and satisfies the group property") {
    Rng rng(106);
    for (int rep = 0; rep < kCases; ++rep) {
        const CMatrix h = random_hermitian(rng, 4);
        const double t1 = uniform(rng, -3.0, 3.0);
        const double t2 = uniform(rng, -3.0, 3.0);
        const CMatrix u1 = propagator(h, t1);
        CHECK(max_abs_diff(u1 * u1.adjoint(), CMatrix::Identity(4, 4)) < 1e-10);
        CHECK(max_abs_diff(u1 * propagator(h, t2), propagator(h, t1 + t2)) < 1e-10);
    }
}

TEST_CASE("subadditivity and triangle inequality for random joint states") {
    Rng rng(107);
    for (int rep = 0; rep < kCases; ++rep) {
        const DensityMatrix rho = random_density(rng, 4);
        const double s1 = von_neumann_entropy(partial_trace(rho, Subsystem::Q));
        const double s2 = von_neumann_entropy(partial_trace(rho, Subsystem::T));
        const double st = von_neumann_entropy(rho);
        CHECK(s1 + s2 >= st - 1e-8);
        CHECK(std::abs(s1 - s2) <= st + 1e-8);
    }
}

TEST_CASE("Ising closed solution equals the exact propagator at random points") {
    Rng rng(108);
    for (int rep = 0; rep < kCases; ++rep) {
        ModelParams p;
        p.coupling = CouplingKind::Ising;
        p.e1 = uniform(rng, 0.0, 0.5);
        p.e2 = uniform(rng, 0.1, 2.0);
        p.j = uniform(rng, -0.5, 0.5);
        const double f00 = uniform(rng, 0.5, 1.0);
        const ThermalPopulations pops{f00, 1.0 - f00, 1.0};
        const double t = uniform(rng, 0.0, 50.0);

        const CMatrix u = propagator(hamiltonian(p), t);
        const CMatrix exact = u * initial_state(pops).matrix() * u.adjoint();
        CHECK(max_abs_diff(ising_density(p, pops, t).matrix(), exact) < 1e-10);

        // eigenvalues of the reduced state are (1 +/- X)/2 and the printed
        // entropy equals the eigenvalue-based one away from degeneracies
        const DensityMatrix rho1 = ising_reduced(p, pops, t, Subsystem::Q);
        const double x = ising_coherence_factor(pops, p.j, t);
        const auto ev = herm_eigvals(rho1.matrix());
        CHECK(std::abs(ev[0] - (1.0 - x) / 2.0) < 1e-10);
        CHECK(std::abs(ev[1] - (1.0 + x) / 2.0) < 1e-10);
        if (1.0 - x > 1e-6) {
            CHECK(std::abs(ising_entropy(pops, p.j, t, EntropyOf::Qubit)
                           - von_neumann_entropy(rho1)) < 1e-10);
        }
    }
}

TEST_CASE("entropies and precession magnitudes are f00 <-> f11 symmetric") {
    Rng rng(109);
    ModelParams ip{1e-4, 1.0, 1e-2, CouplingKind::Ising};
    ModelParams hp{1e-4, 1.0, 1e-2, CouplingKind::Heisenberg};
    for (int rep = 0; rep < kCases; ++rep) {
        const double f00 = uniform(rng, 0.0, 1.0);
        const ThermalPopulations a{f00, 1.0 - f00, 1.0};
        const ThermalPopulations b{1.0 - f00, f00, 1.0};
        const double t = uniform(rng, 0.0, 400.0);
        const double j = uniform(rng, 1e-3, 0.1);
        ip.j = hp.j = j;

        CHECK(std::abs(ising_entropy(a, j, t, EntropyOf::Qubit)
                       - ising_entropy(b, j, t, EntropyOf::Qubit)) < 1e-12);
        CHECK(std::abs(ising_entropy(a, j, t, EntropyOf::Thermal)
                       - ising_entropy(b, j, t, EntropyOf::Thermal)) < 1e-12);
        CHECK(std::abs(std::abs(ising_sigma_plus(ip, a, t))
                       - std::abs(ising_sigma_plus(ip, b, t))) < 1e-12);
        CHECK(std::abs(heis_entropy(hp, a, t, EntropyOf::Qubit)
                       - heis_entropy(hp, b, t, EntropyOf::Qubit)) < 1e-12);
        CHECK(std::abs(heis_entropy(hp, a, t, EntropyOf::Thermal)
                       - heis_entropy(hp, b, t, EntropyOf::Thermal)) < 1e-12);
        CHECK(std::abs(heis_thermal_entropy_repaired(hp, a, t)
                       - heis_thermal_entropy_repaired(hp, b, t)) < 1e-12);
        CHECK(std::abs(std::abs(heis_sigma_plus(hp, a, t))
                       - std::abs(heis_sigma_plus(hp, b, t))) < 1e-12);
        CHECK(std::abs(std::abs(heis_sigma_plus_from_reduced(hp, a, t))
                       - std::abs(heis_sigma_plus_from_reduced(hp, b, t))) < 1e-12);
    }
}

TEST_CASE("random density matrices satisfy the declared invariants") {
    Rng rng(110);
    for (int rep = 0; rep < kCases; ++rep) {
        const DensityMatrix rho = random_density(rng, 4);
        const CMatrix& m = rho.matrix();
        CHECK(max_abs_diff(m, m.adjoint()) <= 1e-12);
        CHECK(std::abs(m.trace() - Complex{1.0, 0.0}) <= 1e-12);
        CHECK(herm_eigvals(m).front() >= -1e-10);
        const double s = von_neumann_entropy(rho);
        CHECK(s >= 0.0);
        CHECK(s <= std::log(4.0) + 1e-10);
    }
}
