#include "heis/causal.hpp"

#include <algorithm>
#include <cmath>

namespace heis {

double default_membership_tol(const Point& q) {
  return 1e-10 * std::max(1.0, q.x * q.x);
}

CausalMembership membership(const Point& q, double tol) {
  const double s = -q.x * q.x + q.y * q.y + 4.0 * std::fabs(q.z);
  const double norm =
      std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (norm <= tol) return CausalMembership::Origin;
  if (s < -tol && q.x > 0.0) return CausalMembership::Interior;
  if (std::fabs(s) <= tol && q.x >= 0.0) return CausalMembership::Boundary;
  return CausalMembership::Outside;
}

CausalMembership membership(const Point& q) {
  return membership(q, default_membership_tol(q));
}

Point beak_point(double tau1, double tau2, BeakBranch branch) {
  if (tau1 < 0.0 || tau2 < 0.0)
    throw NegativeParameterError("beak_point: edge times must be >= 0");
  if (branch == BeakBranch::PlusZ)
    return {tau1 + tau2, tau2 - tau1, tau1 * tau2};
  return {tau1 + tau2, tau1 - tau2, -tau1 * tau2};
}

double beak_height(double y, double z) {
  return std::sqrt(y * y + 4.0 * std::fabs(z));
}

}  // namespace heis
