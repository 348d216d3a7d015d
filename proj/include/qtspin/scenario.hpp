// Scenario configuration for the command-line front end: JSON config files
// with flag overrides, validated before any computation starts.

#ifndef QTSPIN_SCENARIO_HPP
#define QTSPIN_SCENARIO_HPP

#include "qtspin/dynamics.hpp"
#include "qtspin/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qtspin {

// Invalid configuration (exit code 2 at the CLI).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failure (exit code 3 at the CLI).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SimMethod { Exact, Rk4, Both };

struct ScenarioConfig {
    CouplingKind interaction = CouplingKind::Ising;
    double e1 = 1e-4;
    double e2 = 1.0;
    double j = 1e-2;
    std::string temperature = "1";  // positive real, "inf" or "0"
    double t_max = 400.0;
    int steps = 4001;  // grid points on [0, t_max], inclusive
    SimMethod method = SimMethod::Exact;
    std::string output;

    ModelParams model_params() const;
    Temperature parsed_temperature() const;
    TimeGrid grid() const;
    void validate() const;  // throws ConfigError naming the offending key
};

// Parses a JSON config file. Unknown keys are rejected.
ScenarioConfig load_scenario(const std::string& path);

// Applies CLI overrides on top of a (possibly default) config.
struct ScenarioOverrides {
    std::optional<std::string> interaction;
    std::optional<double> e1, e2, j;
    std::optional<std::string> temperature;
    std::optional<double> t_max;
    std::optional<int> steps;
    std::optional<std::string> method;
    std::optional<std::string> output;
};

void apply_overrides(ScenarioConfig& cfg, const ScenarioOverrides& ov);

CouplingKind parse_interaction(const std::string& s);
SimMethod parse_method(const std::string& s);
Temperature parse_temperature(const std::string& s);

} // namespace qtspin

#endif // QTSPIN_SCENARIO_HPP
