#include "qtspin/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>

namespace qtspin {

CouplingKind parse_interaction(const std::string& s) {
    if (s == "ising") return CouplingKind::Ising;
    if (s == "heisenberg") return CouplingKind::Heisenberg;
    throw ConfigError("interaction: expected \"ising\" or \"heisenberg\", got \"" + s + "\"");
}

SimMethod parse_method(const std::string& s) {
    if (s == "exact") return SimMethod::Exact;
    if (s == "rk4") return SimMethod::Rk4;
    if (s == "both") return SimMethod::Both;
    throw ConfigError("method: expected \"exact\", \"rk4\" or \"both\", got \"" + s + "\"");
}

Temperature parse_temperature(const std::string& s) {
    if (s == "inf") return Temperature::infinite();
    if (s == "0") return Temperature::zero();
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        if (v == 0.0) return Temperature::zero();
        if (std::isinf(v) && v > 0.0) return Temperature::infinite();
        return Temperature::finite(v);
    } catch (const std::exception&) {
        throw ConfigError("temperature: expected a positive real, \"inf\" or \"0\", got \"" + s + "\"");
    }
}

ModelParams ScenarioConfig::model_params() const {
    return {e1, e2, j, interaction};
}

Temperature ScenarioConfig::parsed_temperature() const {
    return parse_temperature(temperature);
}

TimeGrid ScenarioConfig::grid() const {
    return TimeGrid(0.0, t_max, steps);
}

void ScenarioConfig::validate() const {
    if (!std::isfinite(e1)) throw ConfigError("e1: must be finite");
    if (!(e2 > 0.0) || !std::isfinite(e2)) throw ConfigError("e2: must be > 0 and finite");
    if (!std::isfinite(j)) throw ConfigError("j: must be finite");
    parsed_temperature();
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ConfigError("t-max: must be > 0");
    if (steps < 2) throw ConfigError("steps: grid too coarse, need at least 2 points");
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed config file " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "interaction", "e1", "e2", "j", "temperature", "t_max", "steps",
        "method", "output"};
    for (const auto& [key, _] : doc.items())
        if (!known.count(key)) throw ConfigError("unknown config key: " + key);

    ScenarioConfig cfg;
    try {
        if (doc.contains("interaction"))
            cfg.interaction = parse_interaction(doc["interaction"].get<std::string>());
        if (doc.contains("e1")) cfg.e1 = doc["e1"].get<double>();
        if (doc.contains("e2")) cfg.e2 = doc["e2"].get<double>();
        if (doc.contains("j")) cfg.j = doc["j"].get<double>();
        if (doc.contains("temperature")) {
            const auto& t = doc["temperature"];
            cfg.temperature = t.is_string() ? t.get<std::string>()
                                            : nlohmann::to_string(t);
        }
        if (doc.contains("t_max")) cfg.t_max = doc["t_max"].get<double>();
        if (doc.contains("steps")) cfg.steps = doc["steps"].get<int>();
        if (doc.contains("method"))
            cfg.method = parse_method(doc["method"].get<std::string>());
        if (doc.contains("output")) cfg.output = doc["output"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config value has wrong type: ") + e.what());
    }
    return cfg;
}

void apply_overrides(ScenarioConfig& cfg, const ScenarioOverrides& ov) {
    if (ov.interaction) cfg.interaction = parse_interaction(*ov.interaction);
    if (ov.e1) cfg.e1 = *ov.e1;
    if (ov.e2) cfg.e2 = *ov.e2;
    if (ov.j) cfg.j = *ov.j;
    if (ov.temperature) cfg.temperature = *ov.temperature;
    if (ov.t_max) cfg.t_max = *ov.t_max;
    if (ov.steps) cfg.steps = *ov.steps;
    if (ov.method) cfg.method = parse_method(*ov.method);
    if (ov.output) cfg.output = *ov.output;
}

} // namespace qtspin
