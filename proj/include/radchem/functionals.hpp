#pragma once
// Lyapunov energy F, dissipation rate D, and the per-step diagnostics row.

#include "radchem/model.hpp"
#include "radchem/ops.hpp"

namespace radchem {

struct EnergyRecord {
  double t = 0.0;
  double dt = 0.0;
  double F = 0.0;
  double D = 0.0;
  double mass_u = 0.0;
  double mass_v = 0.0;
  double mass_w = 0.0;
  double cross_uv = 0.0;   // int u v
  double entropy = 0.0;    // int u ln u
  double sup_u = 0.0;
  double weighted_w = 0.0;  // max_i r_i^kappa |w_i|
  double weighted_v = 0.0;  // max_i r_i^{kappa-1} (|v_i| + |v_r,i|)
  double psi = 0.0;         // running Psi(s)
};

struct FunctionalConfig {
  double kappa = 0.0;  // must exceed dim - 2; 0 means "use dim - 1"
  double effective_kappa(int dim) const { return kappa > 0.0 ? kappa : dim - 1.0; }
};

// int u ln u with the continuous extension x ln x -> 0 at x = 0; the
// integrand argument is clamped below by u_floor.
double entropy_integral(const ModelParams& params, const RadialGrid& grid,
                        const RadialField& u);

// Energy F_{tau,eps}. For tau = eps = 1 this is the form
//   int u ln u - int u v + 1/2 int (Lap v - v + w)^2 + 1/2 int (Lap v - v)^2;
// general (tau, eps) uses
//   int u ln u - int u v + tau/2 int v_t^2 + eps/2 int |Lap v|^2
//   + (1+eps)/2 int |grad v|^2 + 1/2 int v^2,  v_t := Lap v - v + w.
double energy(const ModelParams& params, const FunctionalConfig& cfg,
              const SolutionState& state);

// Dissipation rate
//   D = int u |grad(ln u - v)|^2 + (tau+eps) int |grad v_t|^2 + (tau+1) int v_t^2,
// with the vacuum-cell limit u (u_r/u - v_r)^2, u_r/u clamped to +-1e6,
// where u <= 1e-12. Always >= 0.
double dissipation(const ModelParams& params, const FunctionalConfig& cfg,
                   const SolutionState& state);

EnergyRecord diagnostics_row(const ModelParams& params, const FunctionalConfig& cfg,
                             const SolutionState& state, double psi_value);

}  // namespace radchem
