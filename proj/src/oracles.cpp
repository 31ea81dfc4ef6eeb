#include "radchem/oracles.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "radchem/grid.hpp"

namespace radchem::oracles {

double exact_w_mass(double t, double mass_u0, double mass_w0) {
  const double decay = std::exp(-t);
  return decay * mass_w0 + (1.0 - decay) * mass_u0;
}

double exact_v_mass_bound(double mass_u0, double mass_v0, double mass_w0) {
  return std::max({mass_u0, mass_v0, mass_w0});
}

double fine_quadrature(const std::function<double(double)>& fn, int dim,
                       double radius, long cells) {
  const double area = unit_sphere_area(dim);
  const double h = radius / cells;
  double s = 0.0;
  for (long i = 0; i < cells; ++i) {
    const double r = (i + 0.5) * h;
    s += fn(r) * std::pow(r, dim - 1);
  }
  return s * area * h;
}

std::vector<OracleConstant> load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("load_constants: cannot open " + path);
  std::vector<OracleConstant> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    OracleConstant c;
    if (!(ss >> c.name >> c.value)) throw ConfigError("load_constants: bad record: " + line);
    std::getline(ss, c.provenance);
    if (!c.provenance.empty() && c.provenance.front() == ' ')
      c.provenance.erase(0, c.provenance.find_first_not_of(' '));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace radchem::oracles
