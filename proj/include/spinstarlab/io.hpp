// io.hpp — CSV and SVG emitters for sampled trajectories

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "spinstarlab/spinstar.hpp"

namespace spinstarlab {

// 12 significant digits, scientific notation; locale-independent.
std::string format_value(double v);

// Fixed schema: tau_a,b,d,e,re_c,im_c,cov_xx,cov_yy,concurrence.
inline constexpr const char* kSweepCsvHeader =
    "tau_a,b,d,e,re_c,im_c,cov_xx,cov_yy,concurrence";

void write_sweep_csv(std::ostream& os, const TimeSeries& ts);

// Generic column-oriented CSV: all columns share the length of the first.
void write_table_csv(std::ostream& os, const std::vector<std::string>& names,
                     const std::vector<std::vector<double>>& columns);

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Self-contained line plot: axes, tick labels, legend, one polyline per
// series. No external renderer involved.
void write_svg_plot(std::ostream& os, const std::string& title, const std::string& x_label,
                    const std::vector<PlotSeries>& series);

}  // namespace spinstarlab
