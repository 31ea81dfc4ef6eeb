#include "radchem/model.hpp"

#include <cmath>

namespace radchem {

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::BlowupIndicated: return "BlowupIndicated";
    case VerdictKind::GlobalWithinHorizon: return "GlobalWithinHorizon";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

bool all_finite(const RadialField& f) {
  for (double x : f.values)
    if (!std::isfinite(x)) return false;
  return true;
}

SolutionState initial_state(const ModelParams& params, const RadialGrid& grid,
                            const RadialField& u0, const RadialField& v0,
                            const RadialField& w0) {
  if (params.dim != grid.dim || params.radius != grid.radius)
    throw ConfigError("initial_state: params and grid disagree on geometry");
  for (const RadialField* f : {&u0, &v0, &w0}) {
    if (f->grid != &grid || f->size() != static_cast<std::size_t>(grid.cells))
      throw ConfigError("initial_state: field does not live on the given grid");
    if (!all_finite(*f)) throw NegativeInitialData("initial_state: non-finite sample");
    for (double x : f->values)
      if (x < 0.0) throw NegativeInitialData("initial_state: negative sample");
  }
  SolutionState s;
  s.u = u0;
  s.v = v0;
  s.w = w0;
  s.t = 0.0;
  s.dt = 0.1 * grid.h * grid.h;
  return s;
}

}  // namespace radchem
