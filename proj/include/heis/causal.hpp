#pragma once

// Attainable sets from the identity: the chronological future
// I+ = {-x^2 + y^2 + 4|z| < 0, x > 0}, the causal future J+ (its
// closure) and the boundary surface x = sqrt(y^2 + 4|z|).

#include "heis/types.hpp"

namespace heis {

enum class CausalMembership {
  Interior,  // in I+
  Boundary,  // in J+ \ I+, not the origin
  Origin,
  Outside,
};

enum class BeakBranch { PlusZ, MinusZ };

// Default tolerance used for membership dispatch; s = -x^2 + y^2 + 4|z|
// is quadratic in the coordinates, so the tolerance scales with x^2.
double default_membership_tol(const Point& q);

CausalMembership membership(const Point& q, double tol);
CausalMembership membership(const Point& q);

// Endpoint of the broken lightlike trajectory with edge times tau1,
// tau2 >= 0: (tau1+tau2, tau2-tau1, tau1 tau2) on the z >= 0 sheet,
// (tau1+tau2, tau1-tau2, -tau1 tau2) on the z <= 0 sheet.
Point beak_point(double tau1, double tau2, BeakBranch branch);

// x-coordinate of the boundary surface over (y, z).
double beak_height(double y, double z);

}  // namespace heis
