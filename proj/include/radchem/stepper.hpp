#pragma once
// IMEX time integration: explicit upwinded chemotaxis, implicit diffusion
// and decay (tridiagonal solves), adaptive step size, blowup detection.

#include "radchem/blowup.hpp"
#include "radchem/functionals.hpp"
#include "radchem/model.hpp"

namespace radchem {

struct StepperConfig {
  double cfl = 0.4;       // advective CFL number, in (0, 1]
  double dt_min = 1e-12;
  double dt_max = 1e-3;
  double growth = 1.1;    // dt growth factor per accepted step
  double horizon = 1.0;   // T_end
  double blowup_factor = 1e6;
  double fixed_dt = 0.0;  // > 0 disables adaptivity (convergence studies)
};

enum class StepStatus { Accepted, Rejected };

struct StepResult {
  StepStatus status = StepStatus::Accepted;
  SolutionState state;  // valid only when accepted
};

// Advance one IMEX Euler step of size dt:
//   u* = u - dt div(u grad v)          (explicit, upwinded)
//   (I - dt Lap) u_new = u*
//   ((1+dt) I - dt Lap) v_new = v + dt w
//   tau=1: ((1+dt) I - dt eps Lap) w_new = w + dt u_new
//   tau=0: (I - eps Lap) w_new = u_new
// Rejects on NaN or negativity beyond -1e-12 max u; roundoff-scale
// undershoots of u are clipped to zero.
StepResult step(const ModelParams& params, const SolutionState& state,
                double dt);

// Largest admissible dt at this state: min(dt_max, cfl h / max|v_r|).
double advective_dt_limit(const StepperConfig& cfg, const SolutionState& state);

class DiagnosticsSink {
 public:
  virtual ~DiagnosticsSink() = default;
  virtual void record(const EnergyRecord& rec) = 0;
};

struct RunOptions {
  StepperConfig stepper;
  FunctionalConfig functionals;
  double psi_ell = 2.0;
  int stride = 10;  // accepted steps per emitted record
};

// Integrate until the horizon or until dt underflows; emits one record per
// `stride` accepted steps (plus the initial and final states).
RunVerdict run(const ModelParams& params, const SolutionState& state0,
               const RunOptions& opts, DiagnosticsSink& sink);

}  // namespace radchem
