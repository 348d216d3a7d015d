#include "qtspin/svg.hpp"

#include "qtspin/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qtspin {

namespace {

constexpr double kWidth = 900.0, kHeight = 560.0;
constexpr double kLeft = 70.0, kRight = 30.0, kTop = 40.0, kBottom = 55.0;

const char* kPalette[] = {"#1f6fb4", "#d95f02", "#2a9d3a", "#7a4fa3",
                          "#c22f4f", "#6b6b6b"};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct Range {
    double lo = 0.0, hi = 1.0;
    void include(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
};

} // namespace

std::string render_plot_svg(const CsvTable& table, const PlotSpec& spec) {
    if (spec.y_columns.empty()) throw ConfigError("plot: no y columns given");
    const int xc = table.column(spec.x_column);
    if (xc < 0) throw ConfigError("plot: missing column: " + spec.x_column);
    std::vector<int> ycs;
    for (const auto& name : spec.y_columns) {
        const int c = table.column(name);
        if (c < 0) throw ConfigError("plot: missing column: " + name);
        ycs.push_back(c);
    }
    if (table.rows.empty()) throw ConfigError("plot: CSV has no data rows");

    Range xr{table.rows.front().at(xc), table.rows.front().at(xc)};
    Range yr{table.rows.front().at(ycs.front()), table.rows.front().at(ycs.front())};
    for (const auto& row : table.rows) {
        xr.include(row.at(xc));
        for (int c : ycs) yr.include(row.at(c));
    }
    for (double h : spec.hlines) yr.include(h);
    if (xr.hi == xr.lo) xr.hi = xr.lo + 1.0;
    if (yr.hi == yr.lo) yr.hi = yr.lo + 1.0;
    const double ypad = 0.05 * (yr.hi - yr.lo);
    yr.lo -= ypad;
    yr.hi += ypad;

    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes frame and ticks
    out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
        << num(pw) << "\" height=\"" << num(ph)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double xv = xr.lo + i * (xr.hi - xr.lo) / kTicks;
        const double yv = yr.lo + i * (yr.hi - yr.lo) / kTicks;
        out << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << num(kTop + ph)
            << "\" x2=\"" << num(px(xv)) << "\" y2=\"" << num(kTop + ph + 5)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kTop + ph + 20)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << tick_label(xv)
            << "</text>\n"
            << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(yv))
            << "\" x2=\"" << num(kLeft) << "\" y2=\"" << num(py(yv))
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << num(kLeft - 9) << "\" y=\"" << num(py(yv) + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << tick_label(yv)
            << "</text>\n";
    }

    for (double h : spec.hlines)
        out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(h)) << "\" x2=\""
            << num(kLeft + pw) << "\" y2=\"" << num(py(h))
            << "\" stroke=\"#999999\" stroke-dasharray=\"6,4\"/>\n";
    for (double v : spec.vlines) {
        if (v < xr.lo || v > xr.hi) continue;
        out << "<line x1=\"" << num(px(v)) << "\" y1=\"" << num(kTop) << "\" x2=\""
            << num(px(v)) << "\" y2=\"" << num(kTop + ph)
            << "\" stroke=\"#999999\" stroke-dasharray=\"2,4\"/>\n";
    }

    for (size_t i = 0; i < ycs.size(); ++i) {
        out << "<polyline fill=\"none\" stroke=\""
            << kPalette[i % (sizeof kPalette / sizeof *kPalette)]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& row : table.rows)
            out << num(px(row.at(xc))) << ',' << num(py(row.at(ycs[i]))) << ' ';
        out << "\"/>\n";
    }

    // legend
    for (size_t i = 0; i < ycs.size(); ++i) {
        const std::string label =
            i < spec.labels.size() ? spec.labels[i] : spec.y_columns[i];
        const double ly = kTop + 16.0 + 18.0 * static_cast<double>(i);
        out << "<line x1=\"" << num(kLeft + pw - 150) << "\" y1=\"" << num(ly)
            << "\" x2=\"" << num(kLeft + pw - 120) << "\" y2=\"" << num(ly)
            << "\" stroke=\"" << kPalette[i % (sizeof kPalette / sizeof *kPalette)]
            << "\" stroke-width=\"1.5\"/>\n"
            << "<text x=\"" << num(kLeft + pw - 114) << "\" y=\"" << num(ly + 4)
            << "\" font-size=\"12\">" << label << "</text>\n";
    }

    if (!spec.title.empty())
        out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kTop - 14)
            << "\" font-size=\"15\" text-anchor=\"middle\">" << spec.title
            << "</text>\n";
    if (!spec.x_label.empty())
        out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\""
            << num(kHeight - 14) << "\" font-size=\"13\" text-anchor=\"middle\">"
            << spec.x_label << "</text>\n";
    if (!spec.y_label.empty())
        out << "<text x=\"18\" y=\"" << num(kTop + ph / 2)
            << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
            << num(kTop + ph / 2) << ")\">" << spec.y_label << "</text>\n";

    out << "</svg>\n";
    return out.str();
}

void write_plot_svg(const std::string& path, const CsvTable& table,
                    const PlotSpec& spec) {
    const std::string svg = render_plot_svg(table, spec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << svg;
    if (!out) throw IoError("write failed: " + path);
}

} // namespace qtspin
