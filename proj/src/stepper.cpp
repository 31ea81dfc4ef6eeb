#include "radchem/stepper.hpp"

#include <algorithm>
#include <cmath>

#include "radchem/kernels.hpp"
#include "radchem/ops.hpp"
#include "radchem/tridiag.hpp"

namespace radchem {

namespace {

bool finite_vec(const std::vector<double>& x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

double advective_dt_limit(const StepperConfig& cfg, const SolutionState& state) {
  const RadialGrid& grid = *state.u.grid;
  const auto vr = face_gradient(grid, state.v);
  const double vmax = kernels::max_abs(vr.data(), vr.size());
  double limit = cfg.dt_max;
  if (vmax > 0.0) limit = std::min(limit, cfg.cfl * grid.h / vmax);
  return limit;
}

StepResult step(const ModelParams& params, const SolutionState& state, double dt) {
  const RadialGrid& grid = *state.u.grid;
  const std::size_t n = state.u.size();
  StepResult res;

  // (i) explicit upwinded chemotaxis
  const RadialField chem = chemotactic_divergence(grid, state.u, state.v);
  std::vector<double> u_star = state.u.values;
  kernels::axpy(-dt, chem.data(), u_star.data(), n);

  SolutionState next;
  next.u = RadialField(grid);
  next.v = RadialField(grid);
  next.w = RadialField(grid);

  // (ii) implicit diffusion of u
  solve_helmholtz(grid, 1.0, dt, u_star, next.u.values);

  // negativity / NaN gate on u
  if (!finite_vec(next.u.values)) return {StepStatus::Rejected, {}};
  const double u_max = kernels::max_val(next.u.data(), n);
  const double u_min = kernels::min_val(next.u.data(), n);
  if (!(u_min >= -1e-12 * std::max(u_max, 1.0))) return {StepStatus::Rejected, {}};
  for (double& x : next.u.values)
    if (x < 0.0) x = 0.0;

  // (iii) v update: ((1+dt) I - dt Lap) v_new = v + dt w
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = state.v[i] + dt * state.w[i];
  solve_helmholtz(grid, 1.0 + dt, dt, rhs, next.v.values);

  // (iv) w update
  if (params.tau == 1) {
    for (std::size_t i = 0; i < n; ++i) rhs[i] = state.w[i] + dt * next.u[i];
    solve_helmholtz(grid, 1.0 + dt, dt * params.eps, rhs, next.w.values);
  } else if (params.eps == 1) {
    solve_helmholtz(grid, 1.0, 1.0, next.u.values, next.w.values);
  } else {
    next.w.values = next.u.values;  // tau = eps = 0: w = u pointwise
  }

  if (!finite_vec(next.v.values) || !finite_vec(next.w.values))
    return {StepStatus::Rejected, {}};

  next.t = state.t + dt;
  next.dt = dt;
  res.state = std::move(next);
  return res;
}

RunVerdict run(const ModelParams& params, const SolutionState& state0,
               const RunOptions& opts, DiagnosticsSink& sink) {
  const StepperConfig& cfg = opts.stepper;
  SolutionState state = state0;
  const double sup_u0 = kernels::max_val(state.u.data(), state.u.size());

  PsiAccumulator psi;
  psi.ell = opts.psi_ell;
  psi.F0 = energy(params, opts.functionals, state);
  sink.record(diagnostics_row(params, opts.functionals, state, psi.value));

  double dt = (cfg.fixed_dt > 0.0) ? cfg.fixed_dt : state.dt;
  long accepted = 0;
  RunVerdict verdict;

  while (state.t < cfg.horizon) {
    double dt_try = dt;
    if (cfg.fixed_dt > 0.0) {
      dt_try = std::min(cfg.fixed_dt, cfg.horizon - state.t);
    } else {
      // underflow of the admissible step (advective limit included) ends the
      // run; the clamp to the horizon below is not an underflow
      const double dt_cap = std::min(dt, advective_dt_limit(cfg, state));
      if (dt_cap < cfg.dt_min) {
        const double sup_u = kernels::max_val(state.u.data(), state.u.size());
        if (sup_u >= cfg.blowup_factor * sup_u0) {
          verdict.kind = VerdictKind::BlowupIndicated;
          verdict.reason = "dt underflow with sup-norm escalation";
        } else {
          verdict.kind = VerdictKind::Inconclusive;
          verdict.reason = "dt underflow without sup-norm escalation";
        }
        break;
      }
      dt_try = std::min(dt_cap, cfg.horizon - state.t);
    }

    StepResult res = step(params, state, dt_try);
    if (res.status == StepStatus::Rejected) {
      if (cfg.fixed_dt > 0.0) {
        verdict.kind = VerdictKind::Inconclusive;
        verdict.reason = "step rejected in fixed-dt mode";
        break;
      }
      dt = 0.5 * dt_try;
      if (dt < cfg.dt_min) {
        const double sup_u = kernels::max_val(state.u.data(), state.u.size());
        if (sup_u >= cfg.blowup_factor * sup_u0) {
          verdict.kind = VerdictKind::BlowupIndicated;
          verdict.reason = "dt underflow with sup-norm escalation";
        } else {
          verdict.kind = VerdictKind::Inconclusive;
          verdict.reason = "dt underflow without sup-norm escalation";
        }
        break;
      }
      continue;
    }

    psi = psi_update(psi, params, res.state, dt_try);
    state = std::move(res.state);
    ++accepted;
    if (cfg.fixed_dt <= 0.0)
      dt = std::min(dt_try * cfg.growth, cfg.dt_max);

    if (accepted % std::max(opts.stride, 1) == 0 || state.t >= cfg.horizon)
      sink.record(diagnostics_row(params, opts.functionals, state, psi.value));
  }

  if (state.t >= cfg.horizon) {
    verdict.kind = VerdictKind::GlobalWithinHorizon;
    verdict.reason = "reached horizon";
  } else if (accepted % std::max(opts.stride, 1) != 0) {
    // final state was not yet emitted
    sink.record(diagnostics_row(params, opts.functionals, state, psi.value));
  }
  verdict.t_end = state.t;
  verdict.sup_u_end = kernels::max_val(state.u.data(), state.u.size());
  return verdict;
}

}  // namespace radchem
