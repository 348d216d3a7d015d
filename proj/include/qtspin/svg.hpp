// Minimal deterministic SVG line charts for the CSV data files.

#ifndef QTSPIN_SVG_HPP
#define QTSPIN_SVG_HPP

#include "qtspin/csv.hpp"

#include <string>
#include <vector>

namespace qtspin {

struct PlotSpec {
    std::string x_column;
    std::vector<std::string> y_columns;
    std::vector<std::string> labels;   // one per y column; defaults to column names
    std::vector<double> hlines;        // horizontal reference lines (data y)
    std::vector<double> vlines;        // vertical reference lines (data x)
    std::string title;
    std::string x_label;
    std::string y_label;
};

// Throws ConfigError naming any missing column; IoError on write failure.
std::string render_plot_svg(const CsvTable& table, const PlotSpec& spec);
void write_plot_svg(const std::string& path, const CsvTable& table,
                    const PlotSpec& spec);

} // namespace qtspin

#endif // QTSPIN_SVG_HPP
