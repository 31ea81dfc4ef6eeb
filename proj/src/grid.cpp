#include "radchem/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "radchem/kernels.hpp"

namespace radchem {

double gamma_half_integer(int n) {
  if (n < 1) throw ConfigError("gamma_half_integer: argument must be >= 1");
  if (n % 2 == 0) {
    // Gamma(k) = (k-1)!
    double g = 1.0;
    for (int k = 2; k < n / 2; ++k) g *= k;
    return g;
  }
  // Gamma(1/2 + k) = sqrt(pi) * (1/2)(3/2)...(k - 1/2)
  double g = std::sqrt(std::numbers::pi);
  for (int twice = 1; twice < n - 1; twice += 2) g *= 0.5 * twice;
  return g;
}

double unit_sphere_area(int dim) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * dim) / gamma_half_integer(dim);
}

double RadialGrid::ball_volume() const {
  return sphere_area * std::pow(radius, dim) / dim;
}

RadialGrid build_grid(int dim, double radius, int cells) {
  if (dim < 2) throw ConfigError("build_grid: dim must be >= 2, got " + std::to_string(dim));
  if (!(radius > 0.0)) throw ConfigError("build_grid: radius must be positive");
  if (cells < 16) throw ConfigError("build_grid: cells must be >= 16, got " + std::to_string(cells));

  RadialGrid g;
  g.dim = dim;
  g.radius = radius;
  g.cells = cells;
  g.h = radius / cells;
  g.sphere_area = unit_sphere_area(dim);
  g.centers.resize(cells);
  g.faces.resize(cells + 1);
  g.quad_weights.resize(cells);
  g.center_area.resize(cells);
  g.face_area.resize(cells + 1);
  for (int i = 0; i <= cells; ++i) g.faces[i] = i * g.h;
  g.faces[cells] = radius;  // exact endpoint
  for (int i = 0; i <= cells; ++i) g.face_area[i] = std::pow(g.faces[i], dim - 1);
  for (int i = 0; i < cells; ++i) {
    g.centers[i] = (i + 0.5) * g.h;
    g.center_area[i] = std::pow(g.centers[i], dim - 1);
    g.quad_weights[i] = g.sphere_area * g.center_area[i] * g.h;
  }
  return g;
}

double integrate(const RadialGrid& grid, const RadialField& f) {
  if (f.grid != &grid || f.size() != static_cast<std::size_t>(grid.cells))
    throw ConfigError("integrate: field does not live on this grid");
  return kernels::dot(grid.quad_weights.data(), f.data(), f.size());
}

}  // namespace radchem
