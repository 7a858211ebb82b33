#include "rwa/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace rwa {

namespace {

std::optional<double> try_parse(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        return std::nullopt;
    if (!std::isfinite(v))
        return std::nullopt;
    return v;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// Short human form for tick labels.
std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

} // namespace

int Table::column_index(const std::string& name) const {
    for (size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return int(i);
    throw MissingColumn("no column named '" + name + "'");
}

std::optional<double> Table::value(size_t row, int col) const {
    if (row >= cells.size() || col < 0 || size_t(col) >= cells[row].size())
        return std::nullopt;
    return try_parse(cells[row][size_t(col)]);
}

Table read_csv(std::istream& in) {
    Table t;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ','))
            fields.push_back(field);
        if (!line.empty() && line.back() == ',')
            fields.push_back("");
        if (!have_header) {
            t.columns = std::move(fields);
            have_header = true;
        } else {
            fields.resize(t.columns.size());
            t.cells.push_back(std::move(fields));
        }
    }
    if (!have_header)
        throw EmptyDomain("CSV has no header row");
    return t;
}

Table read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open CSV file '" + path + "'");
    return read_csv(in);
}

std::string emit_plot(const Table& table, const PlotSpec& spec) {
    if (table.columns.empty())
        throw EmptyDomain("table has no columns");
    const int x_col = table.column_index(
        spec.x_col.empty() ? table.columns.front() : spec.x_col);

    std::vector<int> y_cols;
    if (spec.y_cols.empty()) {
        // every column, other than x, whose non-empty cells all parse numeric
        for (size_t c = 0; c < table.columns.size(); ++c) {
            if (int(c) == x_col)
                continue;
            int numeric = 0;
            bool clean = true;
            for (size_t r = 0; r < table.cells.size(); ++r) {
                const std::string& raw = table.cells[r][c];
                if (raw.empty())
                    continue;
                if (try_parse(raw))
                    ++numeric;
                else
                    clean = false;
            }
            if (clean && numeric >= 2)
                y_cols.push_back(int(c));
        }
        if (y_cols.empty())
            throw EmptyDomain("no numeric columns to plot");
    } else {
        for (const std::string& name : spec.y_cols)
            y_cols.push_back(table.column_index(name));
    }

    // collect series points
    struct Series {
        std::string label;
        std::vector<std::pair<double, double>> pts;
    };
    std::vector<Series> series;
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (int yc : y_cols) {
        Series s;
        s.label = table.columns[size_t(yc)];
        for (size_t r = 0; r < table.cells.size(); ++r) {
            const auto xv = table.value(r, x_col);
            const auto yv = table.value(r, yc);
            if (!xv || !yv)
                continue;
            if (spec.log_x && *xv <= 0.0)
                throw ValidationError("log x-axis requires positive data");
            if (spec.log_y && *yv <= 0.0)
                throw ValidationError("log y-axis requires positive data");
            const double px = spec.log_x ? std::log10(*xv) : *xv;
            const double py = spec.log_y ? std::log10(*yv) : *yv;
            s.pts.emplace_back(px, py);
            x_min = std::min(x_min, px);
            x_max = std::max(x_max, px);
            y_min = std::min(y_min, py);
            y_max = std::max(y_max, py);
        }
        if (!s.pts.empty())
            series.push_back(std::move(s));
    }

    size_t total = 0;
    for (const auto& s : series)
        total = std::max(total, s.pts.size());
    if (series.empty() || total < 2)
        throw EmptyDomain("need at least two plottable rows");
    if (x_max <= x_min) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max <= y_min) {
        y_min -= 0.5;
        y_max += 0.5;
    }

    // fixed canvas geometry
    const double width = 800.0, height = 520.0;
    const double left = 78.0, right = 24.0, top = 30.0, bottom = 58.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto sx = [&](double v) { return left + (v - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double v) {
        return top + plot_h - (v - y_min) / (y_max - y_min) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"520\" "
           "viewBox=\"0 0 800 520\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"520\" fill=\"#ffffff\"/>\n";
    svg << "<rect x=\"" << coord(left) << "\" y=\"" << coord(top) << "\" width=\""
        << coord(plot_w) << "\" height=\"" << coord(plot_h)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // 5 ticks per axis; on log axes the label shows the de-logged value
    for (int i = 0; i <= 4; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 4.0;
        const double gx = sx(fx);
        svg << "<line x1=\"" << coord(gx) << "\" y1=\"" << coord(top + plot_h)
            << "\" x2=\"" << coord(gx) << "\" y2=\"" << coord(top + plot_h + 5)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        const double label = spec.log_x ? std::pow(10.0, fx) : fx;
        svg << "<text x=\"" << coord(gx) << "\" y=\"" << coord(top + plot_h + 20)
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
            << tick_label(label) << "</text>\n";

        const double fy = y_min + (y_max - y_min) * i / 4.0;
        const double gy = sy(fy);
        svg << "<line x1=\"" << coord(left - 5) << "\" y1=\"" << coord(gy)
            << "\" x2=\"" << coord(left) << "\" y2=\"" << coord(gy)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        const double label_y = spec.log_y ? std::pow(10.0, fy) : fy;
        svg << "<text x=\"" << coord(left - 9) << "\" y=\"" << coord(gy + 4)
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">"
            << tick_label(label_y) << "</text>\n";
    }

    // x-axis caption: the x column name (plus log marker)
    svg << "<text x=\"" << coord(left + plot_w / 2) << "\" y=\""
        << coord(height - 16)
        << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">"
        << table.columns[size_t(x_col)] << (spec.log_x ? " (log)" : "")
        << "</text>\n";

    for (size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % 8];
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (size_t p = 0; p < series[si].pts.size(); ++p) {
            if (p)
                svg << ' ';
            svg << coord(sx(series[si].pts[p].first)) << ','
                << coord(sy(series[si].pts[p].second));
        }
        svg << "\"/>\n";

        const double ly = top + 16.0 + 18.0 * double(si);
        svg << "<line x1=\"" << coord(left + plot_w - 150) << "\" y1=\""
            << coord(ly - 4) << "\" x2=\"" << coord(left + plot_w - 126)
            << "\" y2=\"" << coord(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << coord(left + plot_w - 120) << "\" y=\"" << coord(ly)
            << "\" font-family=\"monospace\" font-size=\"12\">" << series[si].label
            << (spec.log_y ? " (log)" : "") << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace rwa
