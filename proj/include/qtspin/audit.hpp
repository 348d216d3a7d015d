// Comparison engine: evaluates the closed-form expressions and the
// numerical oracle over a time grid, computes per-quantity deviations and
// classifies each formula as confirmed or discrepant. Discrepancies are
// findings, never errors.

#ifndef QTSPIN_AUDIT_HPP
#define QTSPIN_AUDIT_HPP

#include "qtspin/closedform.hpp"
#include "qtspin/dynamics.hpp"
#include "qtspin/model.hpp"

#include <array>
#include <string>
#include <vector>

namespace qtspin {

enum class Provenance { Oracle, ClosedFormLiteral, ClosedFormRepaired };

std::string to_string(Provenance p);

struct ObservablePoint {
    double s1 = 0.0;
    double s2 = 0.0;
    double s_total = 0.0;
    Complex sigma_plus{0.0, 0.0};
    double abs_sigma_plus = 0.0;
    std::array<double, 3> bloch{0.0, 0.0, 0.0};  // qubit <sx>, <sy>, <sz>
    double rho2_00 = 0.0;
    double rho2_11 = 0.0;
};

struct ObservableSeries {
    TimeGrid grid;
    Provenance source = Provenance::Oracle;
    std::vector<ObservablePoint> points;
};

enum class Quantity {
    S1, S2, STotal,
    AbsSigmaPlus, ReSigmaPlus, ImSigmaPlus,
    BlochX, BlochY, BlochZ,
    Rho200, Rho211
};

double quantity_value(const ObservablePoint& pt, Quantity q);

// Oracle source: everything from evolve_exact + partial traces +
// eigenvalue entropies. Closed-form sources: from the closedform module;
// the repaired variant differs only in the Heisenberg thermal entropy and
// in taking <sigma_+> from the reduced matrix instead of the printed
// transverse-component expression.
ObservableSeries observable_series(const ModelParams& p, Temperature temp,
                                   const TimeGrid& grid, Provenance source);

// Observables of an already-computed state series (tagged as oracle data).
ObservableSeries observables_from_states(const StateSeries& states);

struct AuditTolerances {
    double exact = 1e-9;   // formulas expected to match the oracle exactly
    double regime = 1e-3;  // e1 << j << e2 limit statements
};

struct AuditEntry {
    std::string formula;     // stable identifier of the audited expression
    double max_deviation = 0.0;
    double t_at_max = 0.0;
    double tolerance = 0.0;
    bool confirmed = false;
};

struct AuditReport {
    ModelParams params;
    double f00 = 0.0, f11 = 0.0;
    TimeGrid grid;
    AuditTolerances tolerances;
    std::vector<AuditEntry> entries;

    const AuditEntry* find(const std::string& formula) const;
    std::string to_json() const;   // stable key order
    std::string to_table() const;  // human-readable
};

// Audits the closed-form set belonging to p.coupling against the exact
// propagator. Deterministic for fixed inputs.
AuditReport run_audit(const ModelParams& p, Temperature temp, const TimeGrid& grid,
                      const AuditTolerances& tols = {});

struct Extremum {
    enum class Kind { Max, Min };
    double t = 0.0;
    double value = 0.0;
    Kind kind = Kind::Max;
};

// Local extrema by discrete three-point comparison; endpoints excluded,
// ties broken toward smaller t.
std::vector<Extremum> extrema_locator(const ObservableSeries& series, Quantity q);

} // namespace qtspin

#endif // QTSPIN_AUDIT_HPP
