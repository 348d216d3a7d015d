#include "qtspin/audit.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qtspin {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Oracle: return "oracle";
        case Provenance::ClosedFormLiteral: return "closed-form-literal";
        case Provenance::ClosedFormRepaired: return "closed-form-repaired";
    }
    return "?";
}

double quantity_value(const ObservablePoint& pt, Quantity q) {
    switch (q) {
        case Quantity::S1: return pt.s1;
        case Quantity::S2: return pt.s2;
        case Quantity::STotal: return pt.s_total;
        case Quantity::AbsSigmaPlus: return pt.abs_sigma_plus;
        case Quantity::ReSigmaPlus: return pt.sigma_plus.real();
        case Quantity::ImSigmaPlus: return pt.sigma_plus.imag();
        case Quantity::BlochX: return pt.bloch[0];
        case Quantity::BlochY: return pt.bloch[1];
        case Quantity::BlochZ: return pt.bloch[2];
        case Quantity::Rho200: return pt.rho2_00;
        case Quantity::Rho211: return pt.rho2_11;
    }
    throw std::invalid_argument("quantity_value: unknown quantity");
}

namespace {

std::array<double, 3> bloch_vector(const DensityMatrix& rho1) {
    const CMatrix& m = rho1.matrix();
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

ObservablePoint point_from_states(const DensityMatrix& rho,
                                  const DensityMatrix& rho1,
                                  const DensityMatrix& rho2,
                                  double s1, double s2, Complex sigma_plus) {
    ObservablePoint pt;
    pt.s1 = s1;
    pt.s2 = s2;
    pt.s_total = von_neumann_entropy(rho);
    pt.sigma_plus = sigma_plus;
    pt.abs_sigma_plus = std::abs(sigma_plus);
    pt.bloch = bloch_vector(rho1);
    pt.rho2_00 = rho2(0, 0).real();
    pt.rho2_11 = rho2(1, 1).real();
    return pt;
}

} // namespace

ObservableSeries observables_from_states(const StateSeries& states) {
    ObservableSeries series;
    series.grid = states.grid;
    series.source = Provenance::Oracle;
    series.points.reserve(states.states.size());
    for (const DensityMatrix& rho : states.states) {
        const DensityMatrix rho1 = partial_trace(rho, Subsystem::Q);
        const DensityMatrix rho2 = partial_trace(rho, Subsystem::T);
        series.points.push_back(point_from_states(
            rho, rho1, rho2, von_neumann_entropy(rho1), von_neumann_entropy(rho2),
            2.0 * rho1(1, 0)));
    }
    return series;
}

ObservableSeries observable_series(const ModelParams& p, Temperature temp,
                                   const TimeGrid& grid, Provenance source) {
    const ThermalPopulations pops = thermal_populations(p.e2, temp);
    ObservableSeries series;
    series.grid = grid;
    series.source = source;
    series.points.reserve(grid.n_points);

    if (source == Provenance::Oracle) {
        return observables_from_states(
            evolve_exact(hamiltonian(p), initial_state(pops), grid));
    }

    const bool repaired = source == Provenance::ClosedFormRepaired;
    for (int k = 0; k < grid.n_points; ++k) {
        const double t = grid.time(k);
        if (p.coupling == CouplingKind::Ising) {
            const DensityMatrix rho = ising_density(p, pops, t);
            const DensityMatrix rho1 = ising_reduced(p, pops, t, Subsystem::Q);
            const DensityMatrix rho2 = ising_reduced(p, pops, t, Subsystem::T);
            series.points.push_back(point_from_states(
                rho, rho1, rho2,
                ising_entropy(pops, p.j, t, EntropyOf::Qubit),
                ising_entropy(pops, p.j, t, EntropyOf::Thermal),
                ising_sigma_plus(p, pops, t)));
        } else {
            const DensityMatrix rho = heis_density(p, pops, t);
            const DensityMatrix rho1 = heis_reduced(p, pops, t, Subsystem::Q);
            const DensityMatrix rho2 = heis_reduced(p, pops, t, Subsystem::T);
            const double s2 = repaired ? heis_thermal_entropy_repaired(p, pops, t)
                                       : heis_entropy(p, pops, t, EntropyOf::Thermal);
            const Complex sp = repaired ? heis_sigma_plus_from_reduced(p, pops, t)
                                        : heis_sigma_plus(p, pops, t);
            series.points.push_back(point_from_states(
                rho, rho1, rho2, heis_entropy(p, pops, t, EntropyOf::Qubit), s2, sp));
        }
    }
    return series;
}

namespace {

class DeviationTracker {
public:
    void record(double dev, double t) {
        if (dev > max_dev_) {
            max_dev_ = dev;
            t_at_max_ = t;
        }
    }
    AuditEntry entry(std::string formula, double tol) const {
        return {std::move(formula), max_dev_, t_at_max_, tol, max_dev_ <= tol};
    }

private:
    double max_dev_ = 0.0;
    double t_at_max_ = 0.0;
};

} // namespace

const AuditEntry* AuditReport::find(const std::string& formula) const {
    for (const AuditEntry& e : entries)
        if (e.formula == formula) return &e;
    return nullptr;
}

AuditReport run_audit(const ModelParams& p, Temperature temp, const TimeGrid& grid,
                      const AuditTolerances& tols) {
    const ThermalPopulations pops = thermal_populations(p.e2, temp);
    AuditReport report;
    report.params = p;
    report.f00 = pops.f00;
    report.f11 = pops.f11;
    report.grid = grid;
    report.tolerances = tols;

    const StateSeries oracle = evolve_exact(hamiltonian(p), initial_state(pops), grid);

    if (p.coupling == CouplingKind::Ising) {
        DeviationTracker full, red_q, red_t, ent_q, ent_t, sp;
        for (int k = 0; k < grid.n_points; ++k) {
            const double t = grid.time(k);
            const DensityMatrix& rho = oracle.states[k];
            const DensityMatrix rho1 = partial_trace(rho, Subsystem::Q);
            const DensityMatrix rho2 = partial_trace(rho, Subsystem::T);
            full.record(max_abs_diff(ising_density(p, pops, t).matrix(), rho.matrix()), t);
            red_q.record(max_abs_diff(ising_reduced(p, pops, t, Subsystem::Q).matrix(),
                                      rho1.matrix()), t);
            red_t.record(max_abs_diff(ising_reduced(p, pops, t, Subsystem::T).matrix(),
                                      rho2.matrix()), t);
            ent_q.record(std::abs(ising_entropy(pops, p.j, t, EntropyOf::Qubit)
                                  - von_neumann_entropy(rho1)), t);
            ent_t.record(std::abs(ising_entropy(pops, p.j, t, EntropyOf::Thermal)
                                  - von_neumann_entropy(rho2)), t);
            sp.record(std::abs(ising_sigma_plus(p, pops, t) - 2.0 * rho1(1, 0)), t);
        }
        report.entries.push_back(full.entry("ising_full_density", tols.exact));
        report.entries.push_back(red_q.entry("ising_reduced_qubit", tols.exact));
        report.entries.push_back(red_t.entry("ising_reduced_thermal", tols.exact));
        report.entries.push_back(ent_q.entry("ising_qubit_entropy", tols.exact));
        report.entries.push_back(ent_t.entry("ising_thermal_entropy", tols.exact));
        report.entries.push_back(sp.entry("ising_sigma_plus", tols.exact));
        return report;
    }

    // Heisenberg: the Ising expressions at the same (e1, e2, j, T) serve as
    // the regime-limit reference.
    ModelParams ising_p = p;
    ising_p.coupling = CouplingKind::Ising;

    DeviationTracker full, red_q, red_t, ent_q, ent_t_lit, ent_t_rep, sp_lit, sp_red,
        red_q_consistency, ent_q_regime, sp_regime;
    for (int k = 0; k < grid.n_points; ++k) {
        const double t = grid.time(k);
        const DensityMatrix& rho = oracle.states[k];
        const DensityMatrix rho1 = partial_trace(rho, Subsystem::Q);
        const DensityMatrix rho2 = partial_trace(rho, Subsystem::T);
        const DensityMatrix cf_full = heis_density(p, pops, t);
        const DensityMatrix cf_q = heis_reduced(p, pops, t, Subsystem::Q);
        const DensityMatrix cf_t = heis_reduced(p, pops, t, Subsystem::T);

        full.record(max_abs_diff(cf_full.matrix(), rho.matrix()), t);
        red_q.record(max_abs_diff(cf_q.matrix(), rho1.matrix()), t);
        red_t.record(max_abs_diff(cf_t.matrix(), rho2.matrix()), t);
        red_q_consistency.record(
            max_abs_diff(cf_q.matrix(),
                         partial_trace(cf_full, Subsystem::Q).matrix()), t);
        ent_q.record(std::abs(heis_entropy(p, pops, t, EntropyOf::Qubit)
                              - von_neumann_entropy(rho1)), t);
        ent_t_lit.record(std::abs(heis_entropy(p, pops, t, EntropyOf::Thermal)
                                  - von_neumann_entropy(rho2)), t);
        ent_t_rep.record(std::abs(heis_thermal_entropy_repaired(p, pops, t)
                                  - von_neumann_entropy(rho2)), t);
        // Phase conventions are unstated; magnitudes only for the printed
        // transverse component, complex values for the reduced-matrix route.
        sp_lit.record(std::abs(std::abs(heis_sigma_plus(p, pops, t))
                               - std::abs(2.0 * rho1(1, 0))), t);
        sp_red.record(std::abs(heis_sigma_plus_from_reduced(p, pops, t)
                               - 2.0 * rho1(1, 0)), t);
        ent_q_regime.record(std::abs(heis_entropy(p, pops, t, EntropyOf::Qubit)
                                     - ising_entropy(pops, p.j, t, EntropyOf::Qubit)), t);
        sp_regime.record(std::abs(std::abs(heis_sigma_plus_from_reduced(p, pops, t))
                                  - std::abs(ising_sigma_plus(ising_p, pops, t))), t);
    }
    report.entries.push_back(full.entry("heis_full_density", tols.exact));
    report.entries.push_back(red_q.entry("heis_reduced_qubit", tols.exact));
    report.entries.push_back(red_t.entry("heis_reduced_thermal", tols.exact));
    report.entries.push_back(
        red_q_consistency.entry("heis_reduced_qubit_consistency", tols.exact));
    report.entries.push_back(ent_q.entry("heis_qubit_entropy", tols.exact));
    report.entries.push_back(ent_t_lit.entry("heis_thermal_entropy_literal", tols.exact));
    report.entries.push_back(ent_t_rep.entry("heis_thermal_entropy_repaired", tols.exact));
    report.entries.push_back(sp_lit.entry("heis_sigma_plus_literal_abs", tols.exact));
    report.entries.push_back(sp_red.entry("heis_sigma_plus_reduced", tols.exact));
    report.entries.push_back(
        ent_q_regime.entry("heis_vs_ising_qubit_entropy", tols.regime));
    report.entries.push_back(
        sp_regime.entry("heis_vs_ising_sigma_plus_abs", tols.regime));
    return report;
}

std::string AuditReport::to_json() const {
    nlohmann::ordered_json j;
    j["model"] = {
        {"coupling", params.coupling == CouplingKind::Ising ? "ising" : "heisenberg"},
        {"e1", params.e1},
        {"e2", params.e2},
        {"j", params.j},
        {"f00", f00},
        {"f11", f11},
    };
    j["grid"] = {{"t_start", grid.t_start}, {"t_end", grid.t_end},
                 {"n_points", grid.n_points}};
    j["tolerances"] = {{"exact", tolerances.exact}, {"regime", tolerances.regime}};
    j["entries"] = nlohmann::ordered_json::array();
    for (const AuditEntry& e : entries) {
        j["entries"].push_back({
            {"formula", e.formula},
            {"max_abs_deviation", e.max_deviation},
            {"t_at_max", e.t_at_max},
            {"tolerance", e.tolerance},
            {"verdict", e.confirmed ? "confirmed" : "discrepant"},
        });
    }
    return j.dump(2) + "\n";
}

std::string AuditReport::to_table() const {
    std::ostringstream out;
    out << "formula                              max deviation   at t        tol      verdict\n";
    for (const AuditEntry& e : entries) {
        char line[160];
        std::snprintf(line, sizeof line, "%-36s %13.6e %9.3f %8.0e  %s\n",
                      e.formula.c_str(), e.max_deviation, e.t_at_max, e.tolerance,
                      e.confirmed ? "confirmed" : "discrepant");
        out << line;
    }
    return out.str();
}

std::vector<Extremum> extrema_locator(const ObservableSeries& series, Quantity q) {
    const int n = static_cast<int>(series.points.size());
    if (n < 3)
        throw std::invalid_argument("extrema_locator: need at least 3 grid points");
    std::vector<Extremum> out;
    for (int k = 1; k + 1 < n; ++k) {
        const double prev = quantity_value(series.points[k - 1], q);
        const double cur = quantity_value(series.points[k], q);
        const double next = quantity_value(series.points[k + 1], q);
        if (cur > prev && cur >= next)
            out.push_back({series.grid.time(k), cur, Extremum::Kind::Max});
        else if (cur < prev && cur <= next)
            out.push_back({series.grid.time(k), cur, Extremum::Kind::Min});
    }
    return out;
}

} // namespace qtspin
