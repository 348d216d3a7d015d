// Presets reproducing the reference figures: entropy oscillation curves
// (fig1) and precession-amplitude curves (fig2) for the standard parameter
// set e2=1, e1=1e-4, j=1e-2 at temperatures 0.5, 1 and infinity.

#ifndef QTSPIN_PRESETS_HPP
#define QTSPIN_PRESETS_HPP

#include "qtspin/scenario.hpp"

#include <string>
#include <vector>

namespace qtspin {

struct PresetResult {
    std::vector<std::string> csv_paths;
    std::vector<std::string> svg_paths;
};

// The standard Ising scenario at a given temperature label ("0.5", "1", "inf").
ScenarioConfig preset_scenario(const std::string& temperature_label);

// name is "fig1" or "fig2"; files land in out_dir. Re-running produces
// byte-identical CSVs.
PresetResult run_preset(const std::string& name, const std::string& out_dir);

} // namespace qtspin

#endif // QTSPIN_PRESETS_HPP
