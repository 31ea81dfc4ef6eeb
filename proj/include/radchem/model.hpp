#pragma once
// Model parameters and the evolving solution triple (u, v, w).

#include <string>

#include "radchem/grid.hpp"

namespace radchem {

class NegativeInitialData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelParams {
  int dim = 5;
  double radius = 1.0;
  int tau = 1;   // 0 or 1: w evolves (1) or is elliptic (0)
  int eps = 1;   // 0 or 1: w diffuses (1) or not (0)
  double u_floor = 1e-300;  // entropy clamp
};

struct SolutionState {
  RadialField u, v, w;
  double t = 0.0;
  double dt = 0.0;
};

enum class VerdictKind { BlowupIndicated, GlobalWithinHorizon, Inconclusive };

struct RunVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  double t_end = 0.0;
  double sup_u_end = 0.0;
  std::string reason;
};

const char* to_string(VerdictKind k);

// State at t = 0 with the conservative default dt = 0.1 h^2. Rejects
// negative samples and grid mismatches.
SolutionState initial_state(const ModelParams& params, const RadialGrid& grid,
                            const RadialField& u0, const RadialField& v0,
                            const RadialField& w0);

bool all_finite(const RadialField& f);

}  // namespace radchem
