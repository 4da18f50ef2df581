#pragma once

// Sub-Lorentzian distance d(q) = sqrt(x^2-y^2) * p/sinh p from the
// identity, with its two-sided bound
// sqrt(x^2-y^2-4|z|) <= d <= sqrt(x^2-y^2).

#include "heis/causal.hpp"
#include "heis/types.hpp"

namespace heis {

enum class DistanceRegime {
  Timelike,           // Interior, d > 0
  LightlikeBoundary,  // on the boundary, d = 0
  Origin,
};

struct DistanceResult {
  double value = 0.0;
  DistanceRegime regime = DistanceRegime::Origin;
  double p = 0.0;  // beta(z/(x^2-y^2)); infinity on the boundary
  // Set when roundoff pushed z/(x^2-y^2) outside beta's domain for a
  // point classified Interior and the argument had to be clamped.
  bool reduced_precision = false;
};

// Distance from the identity.  Throws UnreachableError for points
// outside the causal future.
DistanceResult distance(const Point& q);
DistanceResult distance(const Point& q, double tol);

// Lower and upper bound pair; lower is clamped at 0.
std::pair<double, double> distance_bounds(const Point& q);

// Two-point convenience wrapper via left translation:
// d(a, b) = d(Id, a^{-1} b).
DistanceResult distance_between(const Point& a, const Point& b);

}  // namespace heis
