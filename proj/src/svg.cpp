#include "radchem/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "radchem/csv.hpp"

namespace radchem {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

}  // namespace

void write_line_plot(const std::string& path, const std::string& title,
                     const std::vector<double>& x,
                     const std::vector<PlotSeries>& series, bool log_y) {
  constexpr double W = 720, H = 440, ML = 70, MR = 20, MT = 40, MB = 45;
  std::ofstream out(path);
  if (!out) throw IoError("write_line_plot: cannot open " + path);

  auto transform_y = [&](double y) {
    if (!log_y) return y;
    return std::log10(std::max(y, 1e-300));
  };

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (double v : x) {
    xmin = std::min(xmin, v);
    xmax = std::max(xmax, v);
  }
  for (const auto& s : series)
    for (double v : s.y) {
      const double t = transform_y(v);
      if (!std::isfinite(t)) continue;
      ymin = std::min(ymin, t);
      ymax = std::max(ymax, t);
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;

  auto px = [&](double v) { return ML + (v - xmin) / (xmax - xmin) * (W - ML - MR); };
  auto py = [&](double v) { return H - MB - (v - ymin) / (ymax - ymin) * (H - MT - MB); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
      << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << title << (log_y ? " (log10 y)" : "") << "</text>\n";
  // axes
  out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\""
      << H - MB << "\" stroke=\"black\"/>\n";
  // axis labels
  out << "<text x=\"" << ML << "\" y=\"" << H - 12 << "\" font-size=\"12\">"
      << format_double(xmin) << "</text>\n";
  out << "<text x=\"" << W - MR << "\" y=\"" << H - 12
      << "\" text-anchor=\"end\" font-size=\"12\">" << format_double(xmax) << "</text>\n";
  out << "<text x=\"8\" y=\"" << H - MB << "\" font-size=\"12\">" << format_double(ymin)
      << "</text>\n";
  out << "<text x=\"8\" y=\"" << MT + 4 << "\" font-size=\"12\">" << format_double(ymax)
      << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kColors[si % 5];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    const std::size_t npts = std::min(x.size(), s.y.size());
    for (std::size_t i = 0; i < npts; ++i) {
      const double ty = transform_y(s.y[i]);
      if (!std::isfinite(ty)) continue;
      out << px(x[i]) << ',' << py(ty) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << W - MR - 8 << "\" y=\"" << MT + 16 + 16 * si
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">" << s.label
        << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("write_line_plot: write failed");
}

}  // namespace radchem
