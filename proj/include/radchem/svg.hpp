#pragma once
// Static SVG line charts for post-run inspection.

#include <string>
#include <vector>

namespace radchem {

struct PlotSeries {
  std::string label;
  std::vector<double> y;
};

// Writes a simple line chart; series share the x axis. log_y plots
// log10(max(y, floor)).
void write_line_plot(const std::string& path, const std::string& title,
                     const std::vector<double>& x,
                     const std::vector<PlotSeries>& series, bool log_y = false);

}  // namespace radchem
