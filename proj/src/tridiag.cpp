#include "radchem/tridiag.hpp"

#include <stdexcept>

namespace radchem {

void solve_helmholtz(const RadialGrid& grid, double a, double b,
                     const std::vector<double>& rhs, std::vector<double>& x) {
  const int n = grid.cells;
  if (static_cast<int>(rhs.size()) != n)
    throw ConfigError("solve_helmholtz: rhs size mismatch");
  if (!(a > 0.0) || b < 0.0)
    throw ConfigError("solve_helmholtz: require a > 0, b >= 0");
  x.resize(n);

  const double inv_h2 = 1.0 / (grid.h * grid.h);
  // Row i: diag d_i = a + b (ae_i + aw_i), upper -b ae_i, lower -b aw_i,
  // with ae_i = r_{i+1/2}^{n-1} / (r_i^{n-1}), aw_i = r_{i-1/2}^{n-1} / (r_i^{n-1}),
  // all times 1/h^2; boundary faces carry zero flux.
  thread_local std::vector<double> cp, dp;
  cp.assign(n, 0.0);
  dp.assign(n, 0.0);

  auto ae = [&](int i) {
    return (i + 1 < n) ? grid.face_area[i + 1] / grid.center_area[i] * inv_h2 : 0.0;
  };
  auto aw = [&](int i) {
    return (i > 0) ? grid.face_area[i] / grid.center_area[i] * inv_h2 : 0.0;
  };

  double diag0 = a + b * ae(0);
  cp[0] = -b * ae(0) / diag0;
  dp[0] = rhs[0] / diag0;
  for (int i = 1; i < n; ++i) {
    const double lower = -b * aw(i);
    const double diag = a + b * (ae(i) + aw(i));
    const double m = 1.0 / (diag - lower * cp[i - 1]);
    cp[i] = -b * ae(i) * m;
    dp[i] = (rhs[i] - lower * dp[i - 1]) * m;
  }
  x[n - 1] = dp[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
}

}  // namespace radchem
