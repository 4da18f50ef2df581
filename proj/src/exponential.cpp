#include "heis/exponential.hpp"

#include <cmath>

#include "heis/scalar_math.hpp"

namespace heis {

double alpha(double p) { return scalar::alpha_fn(p); }

double beta(double w) { return scalar::beta_fn(w); }

Point exp_map(const ExpCoords& lc) {
  const auto v = scalar::exp_map_raw(lc.psi, lc.c, lc.t);
  return {v[0], v[1], v[2]};
}

ExpCoords exp_inverse(const Point& q) {
  if (membership(q) != CausalMembership::Interior)
    throw NotInteriorError("exp_inverse: point is not in the chronological future");
  const auto v = scalar::exp_inverse_raw(q.x, q.y, q.z);
  return {v[0], v[1], v[2]};
}

ExtremalState hamiltonian_rhs(const ExtremalState& s) {
  ExtremalState d;
  d.h.h1 = -s.h.h2 * s.h.h3;
  d.h.h2 = -s.h.h1 * s.h.h3;
  d.h.h3 = 0.0;
  // q' = -h1 X1 + h2 X2 with X1 = (1,0,-y/2), X2 = (0,1,x/2).
  d.q.x = -s.h.h1;
  d.q.y = s.h.h2;
  d.q.z = (s.h.h1 * s.q.y + s.h.h2 * s.q.x) / 2.0;
  return d;
}

Covector initial_covector(double psi, double c) {
  return {-std::cosh(psi), std::sinh(psi), c};
}

}  // namespace heis
