// qtspin command-line front end.
//
//   qtspin simulate [--config cfg.json] [flags] --output out.csv
//   qtspin audit    [--config cfg.json] [flags] --output report.json
//   qtspin plot     --csv data.csv --x t --y s1 [--y s2 ...] --output plot.svg
//   qtspin preset   {fig1|fig2} [--out-dir DIR]
//
// Exit codes: 0 success, 2 usage/config error, 3 I/O error.

#include <CLI11.hpp>

#include "qtspin/audit.hpp"
#include "qtspin/csv.hpp"
#include "qtspin/presets.hpp"
#include "qtspin/scenario.hpp"
#include "qtspin/svg.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace qtspin;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct ScenarioArgs {
    std::string config_path;
    ScenarioOverrides overrides;
};

void add_scenario_flags(CLI::App* cmd, ScenarioArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file");
    auto opt = [&](const char* name, auto& slot, const char* desc) {
        using T = typename std::decay_t<decltype(slot)>::value_type;
        cmd->add_option_function<T>(
            name, [&slot](const T& v) { slot = v; }, desc);
    };
    opt("--interaction", args.overrides.interaction, "ising | heisenberg");
    opt("--e1", args.overrides.e1, "Q-spin Zeeman energy");
    opt("--e2", args.overrides.e2, "T-spin Zeeman energy (> 0)");
    opt("--j", args.overrides.j, "coupling constant");
    opt("--temperature", args.overrides.temperature, "positive real, \"inf\" or \"0\"");
    opt("--t-max", args.overrides.t_max, "end of the time interval [0, t_max]");
    opt("--steps", args.overrides.steps, "number of grid points (>= 2)");
    opt("--method", args.overrides.method, "exact | rk4 | both");
    opt("--output", args.overrides.output, "output file path");
}

ScenarioConfig resolve_scenario(const ScenarioArgs& args) {
    ScenarioConfig cfg =
        args.config_path.empty() ? ScenarioConfig{} : load_scenario(args.config_path);
    apply_overrides(cfg, args.overrides);
    cfg.validate();
    return cfg;
}

int cmd_simulate(const ScenarioArgs& args) {
    const ScenarioConfig cfg = resolve_scenario(args);
    if (cfg.output.empty()) throw ConfigError("output: no output path given");

    const ModelParams p = cfg.model_params();
    const Temperature temp = cfg.parsed_temperature();
    const TimeGrid grid = cfg.grid();

    ObservableSeries main;
    if (cfg.method == SimMethod::Rk4) {
        const ThermalPopulations pops = thermal_populations(p.e2, temp);
        main = observables_from_states(
            evolve_rk4(hamiltonian(p), initial_state(pops), grid));
    } else {
        main = observable_series(p, temp, grid, Provenance::Oracle);
    }

    if (cfg.method == SimMethod::Both) {
        const ObservableSeries cf =
            observable_series(p, temp, grid, Provenance::ClosedFormLiteral);
        write_series_csv(cfg.output, cfg.e2, main, &cf);
    } else {
        write_series_csv(cfg.output, cfg.e2, main);
    }
    std::cout << "wrote " << cfg.output << " (" << grid.n_points << " points)\n";
    return kExitOk;
}

int cmd_audit(const ScenarioArgs& args) {
    const ScenarioConfig cfg = resolve_scenario(args);
    if (cfg.output.empty()) throw ConfigError("output: no output path given");

    const AuditReport report =
        run_audit(cfg.model_params(), cfg.parsed_temperature(), cfg.grid());
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + cfg.output);
    out << report.to_json();
    if (!out) throw IoError("write failed: " + cfg.output);
    std::cout << report.to_table();
    std::cout << "wrote " << cfg.output << "\n";
    return kExitOk;  // discrepancies are findings, not failures
}

struct PlotArgs {
    std::string csv_path;
    std::string output;
    PlotSpec spec;
};

int cmd_plot(const PlotArgs& args) {
    if (args.output.empty()) throw ConfigError("output: no output path given");
    write_plot_svg(args.output, read_csv(args.csv_path), args.spec);
    std::cout << "wrote " << args.output << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qubit/thermal-spin entropy and precession simulator"};
    app.require_subcommand(1);

    ScenarioArgs sim_args, audit_args;
    auto* sim = app.add_subcommand("simulate", "run a scenario and write a CSV");
    add_scenario_flags(sim, sim_args);
    auto* aud = app.add_subcommand("audit",
                                   "compare closed forms against the numerical oracle");
    add_scenario_flags(aud, audit_args);

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "render an SVG chart from a CSV");
    plot->add_option("--csv", plot_args.csv_path, "input CSV")->required();
    plot->add_option("--x", plot_args.spec.x_column, "x column")->required();
    plot->add_option("--y", plot_args.spec.y_columns, "y columns");
    plot->add_option("--label", plot_args.spec.labels, "legend labels");
    plot->add_option("--hline", plot_args.spec.hlines, "horizontal reference lines");
    plot->add_option("--vline", plot_args.spec.vlines, "vertical reference lines");
    plot->add_option("--title", plot_args.spec.title, "chart title");
    plot->add_option("--x-label", plot_args.spec.x_label, "x axis label");
    plot->add_option("--y-label", plot_args.spec.y_label, "y axis label");
    plot->add_option("--output", plot_args.output, "output SVG")->required();

    std::string preset_name, preset_dir = ".";
    auto* preset = app.add_subcommand("preset", "reproduce a reference figure");
    preset->add_option("name", preset_name, "fig1 | fig2")->required();
    preset->add_option("--out-dir", preset_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_args);
        if (aud->parsed()) return cmd_audit(audit_args);
        if (plot->parsed()) return cmd_plot(plot_args);
        const PresetResult r = run_preset(preset_name, preset_dir);
        for (const auto& path : r.csv_paths) std::cout << "wrote " << path << "\n";
        for (const auto& path : r.svg_paths) std::cout << "wrote " << path << "\n";
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
