#pragma once

// Exponential map of arclength-parametrized timelike extremals, its
// exact inverse on the chronological future, the scalar diffeomorphism
// alpha/beta pair, and the Hamiltonian ODE right-hand side used by the
// integration cross-checks.

#include <array>

#include "heis/causal.hpp"
#include "heis/types.hpp"

namespace heis {

// alpha(p) = (sinh 2p - 2p)/(8 sinh^2 p): odd, strictly increasing,
// range (-1/4, 1/4).
double alpha(double p);

// Inverse of alpha on (-1/4, 1/4).  Throws OutOfDomainError for
// |w| >= 1/4.
double beta(double w);

// Endpoint of the timelike extremal with initial momentum angle psi,
// c = h3 and arclength time t > 0.
Point exp_map(const ExpCoords& lc);

// Inverse of exp_map; q must be Interior (default membership
// tolerance).  Throws NotInteriorError otherwise.
ExpCoords exp_inverse(const Point& q);

// State of the Hamiltonian system: momentum (h1,h2,h3) and point.
struct ExtremalState {
  Covector h;
  Point q;
};

// Right-hand side of h1' = -h2 h3, h2' = -h1 h3, h3' = 0,
// q' = -h1 X1(q) + h2 X2(q).
ExtremalState hamiltonian_rhs(const ExtremalState& s);

// Initial covector on the normal level set: (-cosh psi, sinh psi, c).
Covector initial_covector(double psi, double c);

}  // namespace heis
