#include "qtspin/presets.hpp"

#include "qtspin/audit.hpp"
#include "qtspin/csv.hpp"
#include "qtspin/svg.hpp"

#include <filesystem>

namespace qtspin {

namespace {

const char* kTemperatureLabels[] = {"0.5", "1", "inf"};

std::string file_label(const std::string& temperature) {
    std::string s = temperature;
    for (char& c : s)
        if (c == '.') c = 'p';
    return s;
}

} // namespace

ScenarioConfig preset_scenario(const std::string& temperature_label) {
    ScenarioConfig cfg;
    cfg.interaction = CouplingKind::Ising;
    cfg.e1 = 1e-4;
    cfg.e2 = 1.0;
    cfg.j = 1e-2;
    cfg.temperature = temperature_label;
    cfg.t_max = 400.0;
    cfg.steps = 4001;
    cfg.method = SimMethod::Exact;
    cfg.validate();
    return cfg;
}

PresetResult run_preset(const std::string& name, const std::string& out_dir) {
    if (name != "fig1" && name != "fig2")
        throw ConfigError("unknown preset: " + name);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir);

    PresetResult result;
    for (const char* label : kTemperatureLabels) {
        const ScenarioConfig cfg = preset_scenario(label);
        const ObservableSeries series = observable_series(
            cfg.model_params(), cfg.parsed_temperature(), cfg.grid(),
            Provenance::Oracle);

        const std::string base =
            out_dir + "/" + name + "_T" + file_label(label);
        const std::string csv_path = base + ".csv";
        write_series_csv(csv_path, cfg.e2, series);
        result.csv_paths.push_back(csv_path);

        PlotSpec spec;
        spec.x_column = "e2_t";
        spec.x_label = "E2 t";
        if (name == "fig1") {
            spec.y_columns = {"s1", "s2"};
            spec.labels = {"S1 (T=" + std::string(label) + ")", "S2 (thermal)"};
            spec.y_label = "entropy (nats)";
            spec.title = "Qubit entropy, T=" + std::string(label);
            spec.hlines = {series.points.front().s2};
        } else {
            spec.y_columns = {"abs_sigma_plus"};
            spec.labels = {"|<sigma+>| (T=" + std::string(label) + ")"};
            spec.y_label = "precession amplitude";
            spec.title = "Q-spin precession amplitude, T=" + std::string(label);
            // vertical markers at the entropy maxima
            for (const Extremum& e : extrema_locator(series, Quantity::S1))
                if (e.kind == Extremum::Kind::Max)
                    spec.vlines.push_back(cfg.e2 * e.t);
        }
        const std::string svg_path = base + ".svg";
        write_plot_svg(svg_path, read_csv(csv_path), spec);
        result.svg_paths.push_back(svg_path);
    }
    return result;
}

} // namespace qtspin
