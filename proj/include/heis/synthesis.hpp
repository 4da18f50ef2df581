#pragma once

// Optimal synthesis: the unique maximizer from the identity to any
// point of the causal future.  Interior targets get the timelike
// extremal through exp_inverse; boundary targets get the lightlike
// trajectory with one or two edges along X1 +- X2.

#include <utility>
#include <vector>

#include "heis/causal.hpp"
#include "heis/distance.hpp"
#include "heis/exponential.hpp"
#include "heis/types.hpp"

namespace heis {

enum class TrajectoryKind {
  TimelikeNormal,
  LightlikeSingle,
  LightlikeBroken,
};

enum class BrokenOrder { MinusThenPlus, PlusThenMinus };

enum class ExtremalClass {
  StrictlyNormal,     // H = 1/2
  NonstrictlyNormal,  // H = 0, simultaneously normal and abnormal
};

struct Trajectory {
  TrajectoryKind kind = TrajectoryKind::TimelikeNormal;
  ExpCoords coords;              // TimelikeNormal
  int light_sign = +1;           // LightlikeSingle: sign of the y slope
  BrokenOrder order = BrokenOrder::MinusThenPlus;  // LightlikeBroken
  double tau1 = 0.0;
  double tau2 = 0.0;
  double length = 0.0;
  // (time, point) samples; arclength time for timelike trajectories,
  // the u1 == 1 parametrization for lightlike ones.
  std::vector<std::pair<double, Point>> samples;

  // Piecewise-constant control law matching the sampling grid (exact
  // for lightlike kinds, midpoint-sampled for timelike ones).
  std::vector<std::pair<Control, double>> control_schedule() const;
};

// Unique optimal trajectory from the identity to q with n >= 2 samples.
Trajectory maximizer(const Point& q, int n);

ExtremalClass classify_extremal(const Trajectory& traj);

// Broken lightlike trajectory of the abnormal family: first edge along
// X1 -+ X2 for tau1, second along X1 +- X2 for tau2.
Trajectory abnormal_family(double tau1, double tau2, BrokenOrder order, int n = 32);

}  // namespace heis
