#pragma once

// Independent verification tools: exact integration of
// piecewise-constant controls and a derivative-free length
// maximization over discretized schedules.  This module never calls
// the closed-form distance; it exists to probe it.

#include <cstdint>
#include <utility>
#include <vector>

#include "heis/types.hpp"

namespace heis {

// Exact flow of a constant admissible control over dt: the z-component
// of the velocity is affine in t with slope u1 u2 - u2 u1 = 0, so the
// trapezoid in closed form has no integrator error.
Point flow_constant(const Point& q, const Control& u, double dt);

struct ScheduleResult {
  Point endpoint;
  double length = 0.0;
};

ScheduleResult simulate(const std::vector<std::pair<Control, double>>& schedule);

struct BruteForceOptions {
  int pieces = 32;
  int sweeps = 60;       // coordinate-search sweeps per start
  int restarts = 4;      // total starts (first one seeded by the synthesis law)
  double tol = 1e-9;     // endpoint feasibility tolerance
  std::uint64_t rng_seed = 12345;
  std::vector<double> seed_u2;  // optional explicit seed schedule
};

struct BruteForceResult {
  double length = 0.0;
  double dt = 0.0;                 // uniform piece duration (u1 == 1)
  std::vector<double> u2;          // best schedule found
  double endpoint_error = 0.0;     // |simulate endpoint - target|
};

BruteForceResult brute_force_distance(const Point& q, const BruteForceOptions& opts);

// Convenience overload: iters is the number of search sweeps.
double brute_force_distance(const Point& q, int pieces, int iters, double tol);

}  // namespace heis
