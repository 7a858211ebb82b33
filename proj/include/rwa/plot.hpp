#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rwa/errors.hpp"

namespace rwa {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> cells; // raw text, row-major

    int column_index(const std::string& name) const; // throws MissingColumn
    // Cell parsed as double; nullopt when empty or non-numeric.
    std::optional<double> value(size_t row, int col) const;
};

// Comma-separated, first row is the header; '#'-prefixed lines are skipped.
Table read_csv(std::istream& in);
Table read_csv_file(const std::string& path);

struct PlotSpec {
    std::string x_col;
    std::vector<std::string> y_cols; // empty = every numeric column except x
    bool log_x = false;
    bool log_y = false;
};

// Standalone SVG line chart: one polyline per y column, legend labels are the
// column names. Byte-deterministic for equal inputs. Needs at least two
// plottable rows; log axes need positive data.
std::string emit_plot(const Table& table, const PlotSpec& spec);

} // namespace rwa
