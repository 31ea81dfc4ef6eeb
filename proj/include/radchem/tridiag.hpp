#pragma once
// Thomas solves for the implicit radial operators (a I - b Lap).

#include "radchem/grid.hpp"

namespace radchem {

// Solves (a I - b Lap) x = rhs in place of x, where Lap is the conservative
// radial Laplacian with no-flux faces at r = 0 and r = R. Requires a > 0 and
// b >= 0 (M-matrix; no pivoting needed). rhs and x may alias.
void solve_helmholtz(const RadialGrid& grid, double a, double b,
                     const std::vector<double>& rhs, std::vector<double>& x);

}  // namespace radchem
