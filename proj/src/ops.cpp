#include "radchem/ops.hpp"

#include <cmath>

namespace radchem {

namespace {

void check_on_grid(const RadialGrid& grid, const RadialField& f, const char* op) {
  if (f.grid != &grid || f.size() != static_cast<std::size_t>(grid.cells))
    throw ConfigError(std::string(op) + ": field does not live on this grid");
}

}  // namespace

std::vector<double> face_gradient(const RadialGrid& grid, const RadialField& v) {
  check_on_grid(grid, v, "face_gradient");
  const int n = grid.cells;
  std::vector<double> gr(n + 1, 0.0);
  const double inv_h = 1.0 / grid.h;
  for (int i = 1; i < n; ++i) gr[i] = (v[i] - v[i - 1]) * inv_h;
  return gr;
}

RadialField laplacian(const RadialGrid& grid, const RadialField& f) {
  check_on_grid(grid, f, "laplacian");
  const int n = grid.cells;
  RadialField out(*f.grid);
  const double inv_h = 1.0 / grid.h;
  double flux_lo = 0.0;  // r^{n-1} f_r at the inner face; zero at r = 0
  for (int i = 0; i < n; ++i) {
    const double flux_hi =
        (i + 1 < n) ? grid.face_area[i + 1] * (f[i + 1] - f[i]) * inv_h : 0.0;
    out[i] = (flux_hi - flux_lo) / (grid.center_area[i] * grid.h);
    flux_lo = flux_hi;
  }
  return out;
}

RadialField chemotactic_divergence(const RadialGrid& grid, const RadialField& u,
                                   const RadialField& v) {
  check_on_grid(grid, u, "chemotactic_divergence");
  check_on_grid(grid, v, "chemotactic_divergence");
  const int n = grid.cells;
  RadialField out(*u.grid);
  const double inv_h = 1.0 / grid.h;
  double flux_lo = 0.0;
  for (int i = 0; i < n; ++i) {
    double flux_hi = 0.0;
    if (i + 1 < n) {
      const double vr = (v[i + 1] - v[i]) * inv_h;
      const double u_up = (vr >= 0.0) ? u[i] : u[i + 1];
      flux_hi = grid.face_area[i + 1] * u_up * vr;
    }
    out[i] = (flux_hi - flux_lo) / (grid.center_area[i] * grid.h);
    flux_lo = flux_hi;
  }
  return out;
}

RadialField radial_derivative(const RadialGrid& grid, const RadialField& f) {
  check_on_grid(grid, f, "radial_derivative");
  const int n = grid.cells;
  RadialField out(*f.grid);
  const double inv_h = 1.0 / grid.h;
  if (n == 1) return out;
  // Innermost cell: derivative of the even quadratic a + b r^2 through
  // (r_0, f_0), (r_1, f_1), evaluated at r_0. Vanishes as r_0 -> 0,
  // consistent with f_r(0) = 0.
  {
    const double b = (f[1] - f[0]) / (grid.centers[1] * grid.centers[1] -
                                      grid.centers[0] * grid.centers[0]);
    out[0] = 2.0 * b * grid.centers[0];
  }
  for (int i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) * 0.5 * inv_h;
  out[n - 1] = (f[n - 1] - f[n - 2]) * inv_h;
  return out;
}

}  // namespace radchem
