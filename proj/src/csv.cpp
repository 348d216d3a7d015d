#include "qtspin/csv.hpp"

#include "qtspin/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qtspin {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_point(std::ostringstream& out, const ObservablePoint& pt) {
    out << ',' << fmt(pt.s1) << ',' << fmt(pt.s2) << ',' << fmt(pt.s_total)
        << ',' << fmt(pt.sigma_plus.real()) << ',' << fmt(pt.sigma_plus.imag())
        << ',' << fmt(pt.abs_sigma_plus)
        << ',' << fmt(pt.rho2_00) << ',' << fmt(pt.rho2_11);
}

} // namespace

std::string series_csv_text(double e2, const ObservableSeries& series,
                            const ObservableSeries* closed_form) {
    if (closed_form && closed_form->points.size() != series.points.size())
        throw std::invalid_argument("series_csv_text: series length mismatch");

    std::ostringstream out;
    out << "t,e2_t,s1,s2,s_total,re_sigma_plus,im_sigma_plus,abs_sigma_plus,"
           "rho2_00,rho2_11";
    if (closed_form)
        out << ",s1_cf,s2_cf,s_total_cf,re_sigma_plus_cf,im_sigma_plus_cf,"
               "abs_sigma_plus_cf,rho2_00_cf,rho2_11_cf";
    out << '\n';

    for (size_t k = 0; k < series.points.size(); ++k) {
        const double t = series.grid.time(static_cast<int>(k));
        out << fmt(t) << ',' << fmt(e2 * t);
        append_point(out, series.points[k]);
        if (closed_form) append_point(out, closed_form->points[k]);
        out << '\n';
    }
    return out.str();
}

void write_series_csv(const std::string& path, double e2,
                      const ObservableSeries& series,
                      const ObservableSeries* closed_form) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << series_csv_text(e2, series, closed_form);
    if (!out) throw IoError("write failed: " + path);
}

int CsvTable::column(const std::string& name) const {
    for (size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<double> CsvTable::values(int col) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row.at(col));
    return out;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open CSV file: " + path);
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV file: " + path);
    {
        std::istringstream header(line);
        std::string cell;
        while (std::getline(header, cell, ',')) table.columns.push_back(cell);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> values;
        while (std::getline(row, cell, ',')) values.push_back(std::stod(cell));
        if (values.size() != table.columns.size())
            throw IoError("ragged CSV row in " + path);
        table.rows.push_back(std::move(values));
    }
    return table;
}

} // namespace qtspin
