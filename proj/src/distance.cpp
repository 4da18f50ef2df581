#include "heis/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heis/group.hpp"
#include "heis/scalar_math.hpp"

namespace heis {

DistanceResult distance(const Point& q, double tol) {
  DistanceResult out;
  switch (membership(q, tol)) {
    case CausalMembership::Origin:
      out.regime = DistanceRegime::Origin;
      return out;
    case CausalMembership::Boundary:
      out.regime = DistanceRegime::LightlikeBoundary;
      out.p = std::numeric_limits<double>::infinity();
      return out;
    case CausalMembership::Outside:
      throw UnreachableError("distance: point is outside the causal future");
    case CausalMembership::Interior:
      break;
  }
  const auto ev = scalar::dist_raw(q.x, q.y, q.z);
  out.regime = DistanceRegime::Timelike;
  out.value = ev.value;
  out.p = ev.p;
  out.reduced_precision = ev.clamped;
  return out;
}

DistanceResult distance(const Point& q) {
  return distance(q, default_membership_tol(q));
}

std::pair<double, double> distance_bounds(const Point& q) {
  if (membership(q) == CausalMembership::Outside)
    throw UnreachableError("distance_bounds: point is outside the causal future");
  const double xy2 = (q.x - q.y) * (q.x + q.y);
  const double lower = std::sqrt(std::max(0.0, xy2 - 4.0 * std::fabs(q.z)));
  const double upper = std::sqrt(std::max(0.0, xy2));
  return {lower, upper};
}

DistanceResult distance_between(const Point& a, const Point& b) {
  return distance(product(inverse(a), b));
}

}  // namespace heis
