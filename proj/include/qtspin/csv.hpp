// CSV emission and parsing. Data files carry a header row, comma
// separators, '.' decimals and 17 significant digits; no timestamps, so
// identical inputs produce byte-identical files.

#ifndef QTSPIN_CSV_HPP
#define QTSPIN_CSV_HPP

#include "qtspin/audit.hpp"

#include <string>
#include <vector>

namespace qtspin {

// Columns: t, e2_t, s1, s2, s_total, re_sigma_plus, im_sigma_plus,
// abs_sigma_plus, rho2_00, rho2_11; when closed_form is non-null the same
// observables are appended with the "_cf" suffix.
void write_series_csv(const std::string& path, double e2,
                      const ObservableSeries& series,
                      const ObservableSeries* closed_form = nullptr);

std::string series_csv_text(double e2, const ObservableSeries& series,
                            const ObservableSeries* closed_form = nullptr);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    // Index of a named column, or -1.
    int column(const std::string& name) const;
    std::vector<double> values(int col) const;
};

CsvTable read_csv(const std::string& path);

} // namespace qtspin

#endif // QTSPIN_CSV_HPP
