#include "radchem/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "radchem/kernels.hpp"

namespace radchem {

namespace {

constexpr double kVacuum = 1e-12;      // below this, use the vacuum limit of g
constexpr double kLogSlopeClamp = 1e6;  // clamp on u_r / u at vacuum cells

}  // namespace

double entropy_integral(const ModelParams& params, const RadialGrid& grid,
                        const RadialField& u) {
  double s = 0.0;
  for (int i = 0; i < grid.cells; ++i) {
    const double x = u[i];
    if (x > 0.0) s += grid.quad_weights[i] * x * std::log(std::max(x, params.u_floor));
  }
  return s;
}

double energy(const ModelParams& params, const FunctionalConfig&,
              const SolutionState& state) {
  const RadialGrid& grid = *state.u.grid;
  const auto& qw = grid.quad_weights;
  const std::size_t n = state.u.size();

  const double ent = entropy_integral(params, grid, state.u);
  const double cross = kernels::dot3(qw.data(), state.u.data(), state.v.data(), n);
  const RadialField lap_v = laplacian(grid, state.v);

  if (params.tau == 1 && params.eps == 1) {
    double quad = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double f = lap_v[i] - state.v[i] + state.w[i];
      const double g = lap_v[i] - state.v[i];
      quad += qw[i] * 0.5 * (f * f + g * g);
    }
    return ent - cross + quad;
  }

  const RadialField grad_v = radial_derivative(grid, state.v);
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double vt = lap_v[i] - state.v[i] + state.w[i];
    quad += qw[i] * (0.5 * params.tau * vt * vt +
                     0.5 * params.eps * lap_v[i] * lap_v[i] +
                     0.5 * (1.0 + params.eps) * grad_v[i] * grad_v[i] +
                     0.5 * state.v[i] * state.v[i]);
  }
  return ent - cross + quad;
}

double dissipation(const ModelParams& params, const FunctionalConfig&,
                   const SolutionState& state) {
  const RadialGrid& grid = *state.u.grid;
  const auto& qw = grid.quad_weights;
  const std::size_t n = state.u.size();

  RadialField vt(grid);
  const RadialField lap_v = laplacian(grid, state.v);
  for (std::size_t i = 0; i < n; ++i) vt[i] = lap_v[i] - state.v[i] + state.w[i];
  const RadialField vt_r = radial_derivative(grid, vt);
  const RadialField u_r = radial_derivative(grid, state.u);
  const RadialField v_r = radial_derivative(grid, state.v);

  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d += qw[i] * ((params.tau + params.eps) * vt_r[i] * vt_r[i] +
                  (params.tau + 1) * vt[i] * vt[i]);
    const double u = state.u[i];
    if (u > kVacuum) {
      const double su = std::sqrt(u);
      const double g = u_r[i] / su - su * v_r[i];
      d += qw[i] * g * g;
    } else if (u > 0.0) {
      const double slope = std::clamp(u_r[i] / u, -kLogSlopeClamp, kLogSlopeClamp);
      const double diff = slope - v_r[i];
      d += qw[i] * u * diff * diff;
    }
  }
  return d;
}

EnergyRecord diagnostics_row(const ModelParams& params, const FunctionalConfig& cfg,
                             const SolutionState& state, double psi_value) {
  const RadialGrid& grid = *state.u.grid;
  const auto& qw = grid.quad_weights;
  const std::size_t n = state.u.size();
  const double kappa = cfg.effective_kappa(params.dim);

  EnergyRecord rec;
  rec.t = state.t;
  rec.dt = state.dt;
  rec.F = energy(params, cfg, state);
  rec.D = dissipation(params, cfg, state);
  rec.mass_u = kernels::dot(qw.data(), state.u.data(), n);
  rec.mass_v = kernels::dot(qw.data(), state.v.data(), n);
  rec.mass_w = kernels::dot(qw.data(), state.w.data(), n);
  rec.cross_uv = kernels::dot3(qw.data(), state.u.data(), state.v.data(), n);
  rec.entropy = entropy_integral(params, grid, state.u);
  rec.sup_u = kernels::max_val(state.u.data(), n);

  const RadialField v_r = radial_derivative(grid, state.v);
  double ww = 0.0;
  double wv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.centers[i];
    ww = std::max(ww, std::pow(r, kappa) * std::fabs(state.w[i]));
    wv = std::max(wv, std::pow(r, kappa - 1.0) *
                          (std::fabs(state.v[i]) + std::fabs(v_r[i])));
  }
  rec.weighted_w = ww;
  rec.weighted_v = wv;
  rec.psi = psi_value;
  return rec;
}

}  // namespace radchem
