#pragma once
// Comparison machinery for blowup detection: the running Psi accumulator,
// its lower-bound chain, the closed-form supersolution Phi, and the
// integral-inequality ratio monitor.

#include <vector>

#include "radchem/functionals.hpp"

namespace radchem {

class ConstraintViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PsiAccumulator {
  double value = 0.0;  // current Psi(s)
  double F0 = 0.0;     // initial energy
  double ell = 2.0;    // the comparison constant, > 1
  double last_t = 0.0;
};

struct InequalityMonitorConfig {
  double theta = 0.0;   // 0 means "use the default formula below"
  double C_user = 1.0;  // stand-in for the non-explicit constant
  double m_tilde = 1.0;
  double A = 1.0;

  // max{(n+3)/(n+4), 1 - 1/(2 kappa - n)}
  double effective_theta(int dim, double kappa) const;
};

// Psi(s) = int_0^s [int uv - int u ln u + F0 + ell] dt, accumulated one step
// at a time: value += dt * (cross_uv - entropy + F0 + ell).
PsiAccumulator psi_update(const PsiAccumulator& acc, const ModelParams& params,
                          const SolutionState& state, double dt);

struct PsiChainReport {
  double psi_prime = 0.0;  // cross_uv - entropy + F0 + ell
  double middle = 0.0;     // F0 - F_current + ell
  double ell = 0.0;
  bool violation = false;  // psi_prime < ell - 1e-6 (1 + |ell|)
};

PsiChainReport psi_lower_bound_check(const PsiAccumulator& acc,
                                     const ModelParams& params,
                                     const SolutionState& state, double F_current);

// Closed-form solution of Phi' = C^{-1/theta} (m+A+1)^{-2/theta}
// (1+s)^{-1/theta} Phi^{1/theta}, Phi(1) = ell. Returns +infinity once the
// bracket is exhausted (s past the comparison blowup time).
double phi_closed_form(double s, double ell, double C_user, double theta,
                       double m_tilde, double A);

// T(m,A) = (2^{(th-1)/th} - C^{1/th} (m+A+1)^{2/th} ell^{(th-1)/th})^{th/(th-1)} - 1.
// Requires ell > 2 C^{1/(1-th)} (m+A+1)^{2/(1-th)} + 1, which guarantees
// T in (1, inf).
double blowup_time_bound(double ell, double C_user, double theta, double m_tilde,
                         double A);

struct InequalityPoint {
  double s = 0.0;
  double lhs = 0.0;    // int_0^s int uv (trapezoid in time)
  double rhs = 0.0;    // C (m+A+1)^2 (1+s) (F0 + cross - entropy + 1)^theta
  double ratio = 0.0;  // lhs / rhs; diagnostic only
};

std::vector<InequalityPoint> inequality_ratio(const std::vector<EnergyRecord>& records,
                                              const InequalityMonitorConfig& cfg,
                                              int dim, double kappa);

}  // namespace radchem
