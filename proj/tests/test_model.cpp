#include <doctest.h>

#include "qtspin/model.hpp"

#include <cmath>

using namespace qtspin;

namespace {

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

} // namespace

TEST_CASE("thermal populations: limits and finite temperature") {
    const auto inf = thermal_populations(1.0, Temperature::infinite());
    CHECK(inf.f00 == 0.5);
    CHECK(inf.f11 == 0.5);

    const auto zero = thermal_populations(1.0, Temperature::zero());
    CHECK(zero.f00 == 1.0);
    CHECK(zero.f11 == 0.0);

    // e^{+-1} / (2 cosh 1), frozen from a high-precision evaluation
    const auto t1 = thermal_populations(1.0, Temperature::finite(1.0));
    CHECK(t1.f00 == doctest::Approx(0.8807970779778824).epsilon(1e-14));
    CHECK(t1.f11 == doctest::Approx(0.11920292202211756).epsilon(1e-13));
    CHECK(t1.z == doctest::Approx(std::exp(1.0) + std::exp(-1.0)).epsilon(1e-15));
    CHECK(t1.f00 + t1.f11 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("thermal populations: parameter errors") {
    CHECK_THROWS_AS(thermal_populations(0.0, Temperature::finite(1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(thermal_populations(-1.0, Temperature::infinite()),
                    std::invalid_argument);
    CHECK_THROWS_AS(Temperature::finite(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Temperature::finite(-2.0), std::invalid_argument);
}

TEST_CASE("thermal populations: f00 decreases toward 1/2 as T grows") {
    double prev = 1.0;
    for (double temp : {0.25, 0.5, 1.0, 2.0, 4.0, 100.0}) {
        const auto pops = thermal_populations(1.0, Temperature::finite(temp));
        CHECK(pops.f00 < prev);
        CHECK(pops.f00 > 0.5);
        prev = pops.f00;
    }
}

TEST_CASE("Ising Hamiltonian is the expected diagonal") {
    const ModelParams p{1e-4, 1.0, 1e-2, CouplingKind::Ising};
    const CMatrix h = hamiltonian(p);
    CHECK(h(0, 0).real() == doctest::Approx(-1.0101).epsilon(1e-14));
    CHECK(h(1, 1).real() == doctest::Approx(1.0099).epsilon(1e-14));
    CHECK(h(2, 2).real() == doctest::Approx(-0.9899).epsilon(1e-14));
    CHECK(h(3, 3).real() == doctest::Approx(0.9901).epsilon(1e-14));
    CHECK(max_abs(h - h.diagonal().asDiagonal().toDenseMatrix()) == 0.0);
}

TEST_CASE("Heisenberg Hamiltonian adds the symmetric flip-flop entries") {
    const ModelParams p{1e-4, 1.0, 1e-2, CouplingKind::Heisenberg};
    const CMatrix h = hamiltonian(p);
    CHECK(h(1, 2).real() == doctest::Approx(-0.02).epsilon(1e-14));
    CHECK(h(2, 1).real() == doctest::Approx(-0.02).epsilon(1e-14));
    CHECK(h(0, 0).real() == doctest::Approx(-1.0101).epsilon(1e-14));
    CHECK(std::abs(h(0, 1)) == 0.0);
    CHECK(std::abs(h(0, 3)) == 0.0);
    CHECK(is_hermitian(h, 0.0));
}

TEST_CASE("zero parameters give the zero Hamiltonian") {
    const ModelParams p{0.0, 0.0, 0.0, CouplingKind::Ising};
    CHECK(max_abs(hamiltonian(p)) == 0.0);
}

TEST_CASE("conservation laws of the two couplings") {
    const CMatrix sz_q = kron(pauli_z(), identity2());
    const CMatrix sz_t = kron(identity2(), pauli_z());

    const CMatrix hi = hamiltonian({0.3, 1.7, 0.4, CouplingKind::Ising});
    CHECK(max_abs(commutator(hi, sz_q)) < 1e-14);
    CHECK(max_abs(commutator(hi, sz_t)) < 1e-14);

    const CMatrix hh = hamiltonian({0.3, 1.7, 0.4, CouplingKind::Heisenberg});
    CHECK(max_abs(commutator(hh, sz_q + sz_t)) < 1e-14);
    CHECK(max_abs(commutator(hh, sz_q)) > 0.1);  // single z not conserved
}

TEST_CASE("initial state and its entropy") {
    SUBCASE("zero temperature is pure") {
        const DensityMatrix rho = initial_state({1.0, 0.0, 1.0});
        CHECK(von_neumann_entropy(rho) < 1e-12);
        // |+> (x) |0>
        CHECK(rho(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(rho(0, 2).real() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(std::abs(rho(1, 1)) == 0.0);
    }

    SUBCASE("infinite temperature gives entropy ln 2") {
        const DensityMatrix rho = initial_state({0.5, 0.5, 2.0});
        CHECK(von_neumann_entropy(rho) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }

    SUBCASE("total entropy equals the thermal mixing entropy") {
        const auto pops = thermal_populations(1.0, Temperature::finite(1.0));
        const DensityMatrix rho = initial_state(pops);
        const double expected =
            -(pops.f00 * std::log(pops.f00) + pops.f11 * std::log(pops.f11));
        CHECK(von_neumann_entropy(rho) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(expected == doctest::Approx(0.3653338550872076).epsilon(1e-12));
    }
}

TEST_CASE("paper-regime predicate") {
    CHECK(ModelParams{1e-4, 1.0, 1e-2, CouplingKind::Ising}.in_paper_regime());
    CHECK(ModelParams{0.0, 1.0, 1e-2, CouplingKind::Ising}.in_paper_regime());
    CHECK_FALSE(ModelParams{0.5, 1.0, 1e-2, CouplingKind::Ising}.in_paper_regime());
    CHECK_FALSE(ModelParams{1e-4, 1.0, 0.5, CouplingKind::Ising}.in_paper_regime());
}
