#include "spinstarlab/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace spinstarlab {

std::string format_value(double v) {
    if (v == 0.0) v = 0.0;  // canonical zero, never "-0"
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

void write_sweep_csv(std::ostream& os, const TimeSeries& ts) {
    os << kSweepCsvHeader << '\n';
    for (std::size_t k = 0; k < ts.grid.size(); ++k) {
        const TimeSeriesPoint& p = ts.points[k];
        os << format_value(ts.grid[k]) << ',' << format_value(p.b) << ',' << format_value(p.d)
           << ',' << format_value(p.e) << ',' << format_value(p.re_c) << ','
           << format_value(p.im_c) << ',' << format_value(p.cov_xx) << ','
           << format_value(p.cov_yy) << ',' << format_value(p.concurrence) << '\n';
    }
}

void write_table_csv(std::ostream& os, const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& columns) {
    if (names.size() != columns.size() || columns.empty()) {
        throw std::invalid_argument("write_table_csv: name/column mismatch");
    }
    for (std::size_t c = 1; c < columns.size(); ++c) {
        if (columns[c].size() != columns[0].size()) {
            throw std::invalid_argument("write_table_csv: ragged columns");
        }
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
        os << (c ? "," : "") << names[c];
    }
    os << '\n';
    for (std::size_t row = 0; row < columns[0].size(); ++row) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            os << (c ? "," : "") << format_value(columns[c][row]);
        }
        os << '\n';
    }
}

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#17becf"};

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

void write_svg_plot(std::ostream& os, const std::string& title, const std::string& x_label,
                    const std::vector<PlotSeries>& series) {
    if (series.empty()) {
        throw std::invalid_argument("write_svg_plot: no series");
    }
    const int width = 900, height = 480;
    const int left = 70, right = 30, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const PlotSeries& s : series) {
        for (double v : s.x) {
            x_min = std::min(x_min, v);
            x_max = std::max(x_max, v);
        }
        for (double v : s.y) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    if (!(x_max > x_min)) x_max = x_min + 1.0;
    if (!(y_max > y_min)) y_max = y_min + 1.0;
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const auto to_px_x = [&](double v) { return left + (v - x_min) / (x_max - x_min) * plot_w; };
    const auto to_px_y = [&](double v) { return top + (y_max - v) / (y_max - y_min) * plot_h; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
          "font-family=\"sans-serif\">"
       << title << "</text>\n";

    // frame and ticks
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\""
       << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    const int ticks = 5;
    for (int k = 0; k <= ticks; ++k) {
        const double fx = x_min + (x_max - x_min) * k / ticks;
        const double px = to_px_x(fx);
        os << "<line x1=\"" << px << "\" y1=\"" << top + plot_h << "\" x2=\"" << px << "\" y2=\""
           << top + plot_h + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << px << "\" y=\"" << top + plot_h + 20
           << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">"
           << tick_label(fx) << "</text>\n";
        const double fy = y_min + (y_max - y_min) * k / ticks;
        const double py = to_px_y(fy);
        os << "<line x1=\"" << left - 5 << "\" y1=\"" << py << "\" x2=\"" << left << "\" y2=\""
           << py << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << left - 8 << "\" y=\"" << py + 4
           << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
           << tick_label(fy) << "</text>\n";
    }
    os << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 12
       << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << x_label
       << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % kPalette.size()];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < series[s].x.size(); ++k) {
            os << to_px_x(series[s].x[k]) << ',' << to_px_y(series[s].y[k]) << ' ';
        }
        os << "\"/>\n";
        const double lx = left + plot_w - 150;
        const double ly = top + 18.0 * (s + 1);
        os << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 24 << "\" y2=\""
           << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << lx + 30 << "\" y=\"" << ly
           << "\" font-size=\"12\" font-family=\"sans-serif\">" << series[s].label << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace spinstarlab
