#pragma once
// Independent reference computations used by tests: exact mass laws and a
// fine-grid reference integrator.

#include <functional>
#include <string>
#include <vector>

namespace radchem::oracles {

// int w(t) = e^{-t} int w0 + (1 - e^{-t}) int u0
double exact_w_mass(double t, double mass_u0, double mass_w0);

// Upper envelope for int v(t): max of the three initial masses.
double exact_v_mass_bound(double mass_u0, double mass_v0, double mass_w0);

// Midpoint-rule integral of a radial function over B_radius in R^dim at the
// requested resolution; mints reference constants.
double fine_quadrature(const std::function<double(double)>& fn, int dim,
                       double radius, long cells);

struct OracleConstant {
  std::string name;
  double value = 0.0;
  std::string provenance;
};

// Plain-text constants file: one "name value provenance..." record per line;
// lines starting with '#' are comments.
std::vector<OracleConstant> load_constants(const std::string& path);

}  // namespace radchem::oracles
