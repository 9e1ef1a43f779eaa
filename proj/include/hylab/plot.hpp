#pragma once

#include <string>
#include <vector>

namespace hylab {

struct PlotSeries {
    std::string label;
    std::vector<double> x, y;
};

/// Static SVG line chart (600x400, linear or log-log axes). Deterministic
/// output for identical inputs.
std::string svg_line_chart(const std::string& title, const std::vector<PlotSeries>& series,
                           bool logx = false, bool logy = false);

} // namespace hylab
