#pragma once
// Discrete radial differential operators in conservative finite-volume form.
// All fluxes vanish at the r = 0 face (symmetry) and the r = R face
// (homogeneous Neumann), so integrate() of every divergence telescopes to
// roundoff.

#include "radchem/grid.hpp"

namespace radchem {

// (Lap f)_i = (r_{i+1/2}^{n-1} F_{i+1/2} - r_{i-1/2}^{n-1} F_{i-1/2}) / (r_i^{n-1} h)
// with face gradients F_{i+1/2} = (f_{i+1} - f_i)/h.
RadialField laplacian(const RadialGrid& grid, const RadialField& f);

// Conservative divergence of the chemotactic flux u v_r with first-order
// upwinding of u at faces (upwind cell chosen by the sign of v_r).
RadialField chemotactic_divergence(const RadialGrid& grid, const RadialField& u,
                                   const RadialField& v);

// Cell-centered radial derivative: centered in the interior, one-sided at
// the outer cell, symmetric quadratic fit (enforcing f_r(0) = 0) at the
// innermost cell.
RadialField radial_derivative(const RadialGrid& grid, const RadialField& f);

// Face values of v_r (size N+1, zero at both boundary faces); shared by the
// advective CFL bound and the upwind flux.
std::vector<double> face_gradient(const RadialGrid& grid, const RadialField& v);

}  // namespace radchem
