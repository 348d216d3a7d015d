#include <doctest.h>

#include "qtspin/csv.hpp"
#include "qtspin/presets.hpp"
#include "qtspin/scenario.hpp"
#include "qtspin/svg.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qtspin;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "qtspin_io_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const fs::path path = temp_dir() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QTSPIN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

} // namespace

TEST_CASE("scenario config parsing") {
    SUBCASE("valid file") {
        const std::string path = write_file("ok.json", R"({
            "interaction": "heisenberg", "e1": 1e-4, "e2": 1.0, "j": 0.01,
            "temperature": "inf", "t_max": 100.0, "steps": 11,
            "method": "both", "output": "out.csv"})");
        const ScenarioConfig cfg = load_scenario(path);
        CHECK(cfg.interaction == CouplingKind::Heisenberg);
        CHECK(cfg.method == SimMethod::Both);
        CHECK(cfg.parsed_temperature().kind() == Temperature::Kind::Infinite);
        CHECK(cfg.steps == 11);
        cfg.validate();
    }

    SUBCASE("unknown keys are rejected") {
        const std::string path = write_file("unknown.json", R"({"stepz": 3})");
        CHECK_THROWS_WITH_AS(load_scenario(path), doctest::Contains("stepz"), ConfigError);
    }

    SUBCASE("malformed JSON") {
        const std::string path = write_file("bad.json", "{nope");
        CHECK_THROWS_AS(load_scenario(path), ConfigError);
    }

    SUBCASE("numeric temperature accepted as number or string") {
        ScenarioConfig cfg;
        cfg.temperature = "0.5";
        CHECK(cfg.parsed_temperature().value() == doctest::Approx(0.5));
        cfg.temperature = "0";
        CHECK(cfg.parsed_temperature().kind() == Temperature::Kind::Zero);
        cfg.temperature = "warm";
        CHECK_THROWS_AS(cfg.parsed_temperature(), ConfigError);
    }

    SUBCASE("validation names the offending key") {
        ScenarioConfig cfg;
        cfg.steps = 1;
        CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("steps"), ConfigError);
        cfg = {};
        cfg.e2 = -1.0;
        CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("e2"), ConfigError);
    }

    SUBCASE("overrides take precedence") {
        ScenarioConfig cfg;
        ScenarioOverrides ov;
        ov.interaction = "heisenberg";
        ov.steps = 42;
        apply_overrides(cfg, ov);
        CHECK(cfg.interaction == CouplingKind::Heisenberg);
        CHECK(cfg.steps == 42);
    }
}

TEST_CASE("CSV writing and reading round-trip") {
    const ScenarioConfig cfg = preset_scenario("1");
    const TimeGrid grid(0.0, 10.0, 6);
    const ObservableSeries series = observable_series(
        cfg.model_params(), cfg.parsed_temperature(), grid, Provenance::Oracle);
    const ObservableSeries cf = observable_series(
        cfg.model_params(), cfg.parsed_temperature(), grid,
        Provenance::ClosedFormLiteral);

    const std::string path = (temp_dir() / "series.csv").string();
    write_series_csv(path, cfg.e2, series, &cf);

    const CsvTable table = read_csv(path);
    CHECK(table.columns.size() == 18);
    CHECK(table.columns.front() == "t");
    CHECK(table.column("abs_sigma_plus_cf") == 15);
    REQUIRE(table.rows.size() == 6);
    for (size_t k = 0; k < table.rows.size(); ++k) {
        CHECK(table.rows[k][0] == doctest::Approx(grid.time(static_cast<int>(k))).epsilon(1e-15));
        CHECK(table.rows[k][table.column("s1")]
              == doctest::Approx(series.points[k].s1).epsilon(1e-15));
        CHECK(table.rows[k][table.column("s1_cf")]
              == doctest::Approx(cf.points[k].s1).epsilon(1e-15));
    }
    // e2_t column is e2 * t
    CHECK(table.rows[3][1] == doctest::Approx(cfg.e2 * grid.time(3)).epsilon(1e-15));
}

TEST_CASE("SVG rendering") {
    const std::string csv = write_file("plot.csv", "t,y\n0,0\n1,0.5\n2,0.25\n");
    const CsvTable table = read_csv(csv);

    PlotSpec spec;
    spec.x_column = "t";
    spec.y_columns = {"y"};
    spec.hlines = {0.4};
    const std::string svg = render_plot_svg(table, spec);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(render_plot_svg(table, spec) == svg);  // deterministic

    SUBCASE("missing column is named") {
        PlotSpec bad = spec;
        bad.y_columns = {"nope"};
        CHECK_THROWS_WITH_AS(render_plot_svg(table, bad), doctest::Contains("nope"),
                             ConfigError);
    }

    SUBCASE("empty y-column list") {
        PlotSpec bad = spec;
        bad.y_columns.clear();
        CHECK_THROWS_AS(render_plot_svg(table, bad), ConfigError);
    }
}

TEST_CASE("presets produce consumable, reproducible files") {
    const std::string dir = (temp_dir() / "presets").string();
    const PresetResult r1 = run_preset("fig1", dir);
    REQUIRE(r1.csv_paths.size() == 3);
    REQUIRE(r1.svg_paths.size() == 3);

    // CSVs carry the simulate schema and plot consumed them already
    const CsvTable table = read_csv(r1.csv_paths[1]);
    CHECK(table.column("s1") >= 0);
    CHECK(table.rows.size() == 4001);
    for (const auto& path : r1.svg_paths)
        CHECK(slurp(path).find("<svg") != std::string::npos);

    // byte-identical on re-run
    const std::string first = slurp(r1.csv_paths[0]);
    const PresetResult r2 = run_preset("fig1", dir);
    CHECK(slurp(r2.csv_paths[0]) == first);

    CHECK_THROWS_AS(run_preset("fig9", dir), ConfigError);
}

TEST_CASE("CLI exit codes and outputs") {
    const std::string dir = temp_dir().string();

    SUBCASE("simulate writes a CSV") {
        const std::string out = dir + "/cli_sim.csv";
        CHECK(run_cli("simulate --steps 11 --t-max 10 --output " + out) == 0);
        CHECK(read_csv(out).rows.size() == 11);
    }

    SUBCASE("simulate with method=both appends closed-form columns") {
        const std::string out = dir + "/cli_sim_both.csv";
        CHECK(run_cli("simulate --steps 5 --t-max 10 --method both --output " + out) == 0);
        CHECK(read_csv(out).column("s1_cf") >= 0);
    }

    SUBCASE("rk4 method runs") {
        const std::string out = dir + "/cli_sim_rk4.csv";
        CHECK(run_cli("simulate --steps 5 --t-max 10 --method rk4 --output " + out) == 0);
        CHECK(read_csv(out).rows.size() == 5);
    }

    SUBCASE("too coarse grid exits 2") {
        CHECK(run_cli("simulate --steps 1 --output " + dir + "/x.csv") == 2);
    }

    SUBCASE("malformed config exits 2") {
        const std::string cfg = write_file("cli_bad.json", "{nope");
        CHECK(run_cli("simulate --config " + cfg + " --output " + dir + "/x.csv") == 2);
    }

    SUBCASE("unwritable output exits 3") {
        CHECK(run_cli("simulate --steps 5 --t-max 1 --output /nonexistent/dir/x.csv") == 3);
    }

    SUBCASE("audit writes a JSON report and exits 0 despite discrepancies") {
        const std::string out = dir + "/cli_audit.json";
        CHECK(run_cli("audit --interaction heisenberg --steps 51 --t-max 100 --output "
                      + out) == 0);
        const std::string text = slurp(out);
        CHECK(text.find("\"verdict\"") != std::string::npos);
        CHECK(text.find("discrepant") != std::string::npos);
    }

    SUBCASE("plot renders and reports missing columns") {
        const std::string csv_out = dir + "/cli_plot.csv";
        REQUIRE(run_cli("simulate --steps 11 --t-max 10 --output " + csv_out) == 0);
        const std::string svg_out = dir + "/cli_plot.svg";
        CHECK(run_cli("plot --csv " + csv_out + " --x e2_t --y s1 --y s2 --output "
                      + svg_out) == 0);
        CHECK(slurp(svg_out).find("<polyline") != std::string::npos);
        CHECK(run_cli("plot --csv " + csv_out + " --x e2_t --y nope --output "
                      + svg_out) == 2);
    }

    SUBCASE("preset subcommand") {
        CHECK(run_cli("preset fig2 --out-dir " + dir + "/cli_preset") == 0);
        CHECK(fs::exists(dir + "/cli_preset/fig2_Tinf.csv"));
        CHECK(run_cli("preset fig9 --out-dir " + dir) == 2);
    }
}
