#pragma once
// Low-energy initial-data family: a unit-mass mollifier spike injected on
// top of a base triple, with amplitudes chosen so the uv cross term
// diverges logarithmically while the remaining energy terms stay tame.

#include <vector>

#include "radchem/functionals.hpp"

namespace radchem {

class UnderresolvedEta : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normalization constant c of phi(r) = c exp(-1/(1-r^2)) on B_1 in R^dim,
// fixed so the fine-grid integral of phi equals 1. Cached per dimension.
double mollifier_normalization(int dim);

// phi(r) at a single radius (0 for r >= 1).
double mollifier_value(int dim, double r);

// Samples of phi on the grid.
RadialField mollifier(const RadialGrid& grid);

struct FamilyParams {
  double gamma = 1.0;
  double eta = 0.25;  // in (0, eta_star), eta_star = min(1/2, R)
  RadialField base_u, base_v, base_w;
};

struct FamilyTriple {
  RadialField u, v, w;
};

// u_eta = u0 + (ln 1/eta)^{2 gamma} eta^{-n/2-2} phi(r/eta)
// v_eta = v0 + (ln 1/eta)^{-gamma}  eta^{2-n/2} phi(r/eta)
// w_eta = w0 + (ln 1/eta)^{-gamma}  eta^{2-n/2} phi(r/eta)
FamilyTriple synth_family(const RadialGrid& grid, const FamilyParams& params);

struct FamilyRow {
  double eta = 0.0;
  double F = 0.0;
  double cross_uv = 0.0;
  double L1_dist_u = 0.0;
  double W22_dist_v = 0.0;
};

// One row per eta (strictly decreasing ladder). Requires at least 32 cells
// inside B_eta for every requested eta.
std::vector<FamilyRow> energy_divergence_table(const RadialGrid& grid,
                                               const FamilyParams& base_params,
                                               const std::vector<double>& etas);

}  // namespace radchem
