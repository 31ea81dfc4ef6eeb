#include "radchem/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radchem/kernels.hpp"

namespace radchem {

double InequalityMonitorConfig::effective_theta(int dim, double kappa) const {
  if (theta > 0.0) return theta;
  const double base = (dim + 3.0) / (dim + 4.0);
  const double vartheta = 1.0 - 1.0 / (2.0 * kappa - dim);
  return std::max(base, vartheta);
}

PsiAccumulator psi_update(const PsiAccumulator& acc, const ModelParams& params,
                          const SolutionState& state, double dt) {
  if (!(dt > 0.0)) throw ConfigError("psi_update: dt must be positive");
  const RadialGrid& grid = *state.u.grid;
  const double cross = kernels::dot3(grid.quad_weights.data(), state.u.data(),
                                     state.v.data(), state.u.size());
  const double ent = entropy_integral(params, grid, state.u);
  PsiAccumulator next = acc;
  next.value += dt * (cross - ent + acc.F0 + acc.ell);
  next.last_t = acc.last_t + dt;
  return next;
}

PsiChainReport psi_lower_bound_check(const PsiAccumulator& acc,
                                     const ModelParams& params,
                                     const SolutionState& state, double F_current) {
  const RadialGrid& grid = *state.u.grid;
  const double cross = kernels::dot3(grid.quad_weights.data(), state.u.data(),
                                     state.v.data(), state.u.size());
  const double ent = entropy_integral(params, grid, state.u);
  PsiChainReport rep;
  rep.psi_prime = cross - ent + acc.F0 + acc.ell;
  rep.middle = acc.F0 - F_current + acc.ell;
  rep.ell = acc.ell;
  rep.violation = rep.psi_prime < acc.ell - 1e-6 * (1.0 + std::fabs(acc.ell));
  return rep;
}

double phi_closed_form(double s, double ell, double C_user, double theta,
                       double m_tilde, double A) {
  if (s < 1.0) throw ConfigError("phi_closed_form: requires s >= 1");
  if (!(ell > 0.0 && C_user > 0.0 && m_tilde > 0.0 && A > 0.0) || theta <= 0.0 ||
      theta >= 1.0)
    throw ConfigError("phi_closed_form: invalid parameters");
  const double p = (theta - 1.0) / theta;  // negative exponent
  const double coef = std::pow(C_user, -1.0 / theta) * std::pow(m_tilde + A + 1.0, -2.0 / theta);
  const double bracket =
      std::pow(ell, p) - std::pow(2.0, p) * coef + std::pow(1.0 + s, p) * coef;
  if (bracket <= 0.0) return std::numeric_limits<double>::infinity();
  return std::pow(bracket, theta / (theta - 1.0));
}

double blowup_time_bound(double ell, double C_user, double theta, double m_tilde,
                         double A) {
  if (theta <= 0.0 || theta >= 1.0 || !(C_user > 0.0))
    throw ConfigError("blowup_time_bound: invalid parameters");
  const double threshold =
      2.0 * std::pow(C_user, 1.0 / (1.0 - theta)) *
          std::pow(m_tilde + A + 1.0, 2.0 / (1.0 - theta)) +
      1.0;
  if (!(ell > threshold))
    throw ConstraintViolated("blowup_time_bound: ell must exceed " +
                             std::to_string(threshold));
  const double p = (theta - 1.0) / theta;
  const double inner = std::pow(2.0, p) - std::pow(C_user, 1.0 / theta) *
                                              std::pow(m_tilde + A + 1.0, 2.0 / theta) *
                                              std::pow(ell, p);
  return std::pow(inner, theta / (theta - 1.0)) - 1.0;
}

std::vector<InequalityPoint> inequality_ratio(const std::vector<EnergyRecord>& records,
                                              const InequalityMonitorConfig& cfg,
                                              int dim, double kappa) {
  std::vector<InequalityPoint> out;
  out.reserve(records.size());
  const double th = cfg.effective_theta(dim, kappa);
  const double scale = cfg.C_user * std::pow(cfg.m_tilde + cfg.A + 1.0, 2.0);
  double lhs = 0.0;
  double F0 = records.empty() ? 0.0 : records.front().F;
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (k > 0) {
      const double dt = records[k].t - records[k - 1].t;
      lhs += 0.5 * dt * (records[k].cross_uv + records[k - 1].cross_uv);
    }
    InequalityPoint p;
    p.s = records[k].t;
    p.lhs = lhs;
    const double base =
        std::max(0.0, F0 + records[k].cross_uv - records[k].entropy + 1.0);
    p.rhs = scale * (1.0 + p.s) * std::pow(base, th);
    p.ratio = (p.rhs > 0.0) ? p.lhs / p.rhs
                            : (p.lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    out.push_back(p);
  }
  return out;
}

}  // namespace radchem
