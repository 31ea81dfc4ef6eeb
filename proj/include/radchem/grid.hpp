#pragma once
// Radial grid on the ball B_R in R^n: cell-centered samples with
// n-dimensional midpoint quadrature weights. There is deliberately no node
// at r = 0; the origin enters only through the zero-flux face at faces[0].

#include <stdexcept>
#include <vector>

namespace radchem {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RadialGrid {
  int dim = 0;          // spatial dimension n >= 2
  double radius = 0.0;  // R
  int cells = 0;        // N
  double h = 0.0;       // R / N
  double sphere_area = 0.0;  // omega_n, surface area of the unit sphere
  std::vector<double> centers;       // r_i = (i + 1/2) h
  std::vector<double> faces;         // r_{i-1/2} = i h, size N+1
  std::vector<double> quad_weights;  // omega_n r_i^{n-1} h
  std::vector<double> center_area;   // r_i^{n-1}
  std::vector<double> face_area;     // r_{i-1/2}^{n-1}, size N+1

  double ball_volume() const;  // |B_R| = omega_n R^n / n
};

struct RadialField {
  const RadialGrid* grid = nullptr;
  std::vector<double> values;

  RadialField() = default;
  explicit RadialField(const RadialGrid& g, double fill = 0.0)
      : grid(&g), values(static_cast<std::size_t>(g.cells), fill) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  const double* data() const { return values.data(); }
  double* data() { return values.data(); }
};

// Gamma(n/2) for integer n >= 1 via the half-integer recursion.
double gamma_half_integer(int n);

// Surface area of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int dim);

RadialGrid build_grid(int dim, double radius, int cells);

// Weighted midpoint quadrature: sum_i f_i w_i, realizing the radial form
// of the volume integral over B_R.
double integrate(const RadialGrid& grid, const RadialField& f);

}  // namespace radchem
