#include "radchem/initial_data.hpp"

#include <cmath>
#include <map>
#include <string>

namespace radchem {

namespace {

constexpr int kNormalizationCells = 1 << 20;
constexpr int kMinCellsPerSpike = 32;

double bump_raw(double r) {
  if (r >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - r * r));
}

double eta_star(const RadialGrid& grid) { return std::min(0.5, grid.radius); }

void validate_family(const RadialGrid& grid, const FamilyParams& p) {
  if (!(p.gamma > 0.0)) throw ConfigError("synth_family: gamma must be positive");
  if (!(p.eta > 0.0) || p.eta >= eta_star(grid))
    throw ConfigError("synth_family: eta must lie in (0, min(1/2, R))");
}

}  // namespace

double mollifier_normalization(int dim) {
  static std::map<int, double> cache;
  auto it = cache.find(dim);
  if (it != cache.end()) return it->second;
  // midpoint rule on a fine auxiliary grid over [0, 1]
  const double area = unit_sphere_area(dim);
  const double h = 1.0 / kNormalizationCells;
  double integral = 0.0;
  for (int i = 0; i < kNormalizationCells; ++i) {
    const double r = (i + 0.5) * h;
    integral += bump_raw(r) * std::pow(r, dim - 1);
  }
  integral *= area * h;
  const double c = 1.0 / integral;
  cache[dim] = c;
  return c;
}

double mollifier_value(int dim, double r) {
  return mollifier_normalization(dim) * bump_raw(r);
}

RadialField mollifier(const RadialGrid& grid) {
  RadialField phi(grid);
  const double c = mollifier_normalization(grid.dim);
  for (int i = 0; i < grid.cells; ++i) phi[i] = c * bump_raw(grid.centers[i]);
  return phi;
}

FamilyTriple synth_family(const RadialGrid& grid, const FamilyParams& params) {
  validate_family(grid, params);
  const int n = grid.dim;
  const double eta = params.eta;
  const double L = std::log(1.0 / eta);
  const double amp_u = std::pow(L, 2.0 * params.gamma) * std::pow(eta, -0.5 * n - 2.0);
  const double amp_vw = std::pow(L, -params.gamma) * std::pow(eta, 2.0 - 0.5 * n);

  auto base_or_zero = [&](const RadialField& base) {
    if (base.values.empty()) return RadialField(grid);
    if (base.grid != &grid) throw ConfigError("synth_family: base field on wrong grid");
    return base;
  };
  FamilyTriple out{base_or_zero(params.base_u), base_or_zero(params.base_v),
                   base_or_zero(params.base_w)};
  for (int i = 0; i < grid.cells; ++i) {
    const double spike = mollifier_value(n, grid.centers[i] / eta);
    out.u[i] += amp_u * spike;
    out.v[i] += amp_vw * spike;
    out.w[i] += amp_vw * spike;
  }
  return out;
}

std::vector<FamilyRow> energy_divergence_table(const RadialGrid& grid,
                                               const FamilyParams& base_params,
                                               const std::vector<double>& etas) {
  for (std::size_t k = 0; k + 1 < etas.size(); ++k)
    if (!(etas[k] > etas[k + 1]))
      throw ConfigError("energy_divergence_table: etas must be strictly decreasing");
  for (double eta : etas) {
    if (!(eta > 0.0) || eta >= eta_star(grid))
      throw ConfigError("energy_divergence_table: eta outside (0, min(1/2, R))");
    if (eta / grid.h < kMinCellsPerSpike)
      throw UnderresolvedEta("energy_divergence_table: eta = " + std::to_string(eta) +
                             " has fewer than 32 cells inside B_eta");
  }

  ModelParams mp;
  mp.dim = grid.dim;
  mp.radius = grid.radius;
  mp.tau = 1;
  mp.eps = 1;
  FunctionalConfig fcfg;

  RadialField u0 = base_params.base_u.values.empty() ? RadialField(grid) : base_params.base_u;
  RadialField v0 = base_params.base_v.values.empty() ? RadialField(grid) : base_params.base_v;

  std::vector<FamilyRow> rows;
  rows.reserve(etas.size());
  for (double eta : etas) {
    FamilyParams p = base_params;
    p.eta = eta;
    FamilyTriple trip = synth_family(grid, p);

    SolutionState s;
    s.u = trip.u;
    s.v = trip.v;
    s.w = trip.w;

    FamilyRow row;
    row.eta = eta;
    row.F = energy(mp, fcfg, s);
    {
      const auto& qw = grid.quad_weights;
      double cross = 0.0, l1 = 0.0;
      for (int i = 0; i < grid.cells; ++i) {
        cross += qw[i] * trip.u[i] * trip.v[i];
        l1 += qw[i] * std::fabs(trip.u[i] - u0[i]);
      }
      row.cross_uv = cross;
      row.L1_dist_u = l1;
    }
    {
      RadialField d(grid);
      for (int i = 0; i < grid.cells; ++i) d[i] = trip.v[i] - v0[i];
      const RadialField dr = radial_derivative(grid, d);
      const RadialField dl = laplacian(grid, d);
      double w22 = 0.0;
      for (int i = 0; i < grid.cells; ++i)
        w22 += grid.quad_weights[i] * (d[i] * d[i] + dr[i] * dr[i] + dl[i] * dl[i]);
      row.W22_dist_v = std::sqrt(w22);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace radchem
