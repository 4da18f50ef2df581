#include "heis/synthesis.hpp"

#include <cmath>

namespace heis {

namespace {

Point broken_at(double s, double tau1, BrokenOrder order) {
  if (order == BrokenOrder::MinusThenPlus) {
    if (s <= tau1) return {s, 0.0 - s, 0.0};
    return {s, s - 2.0 * tau1, tau1 * (s - tau1)};
  }
  if (s <= tau1) return {s, s, 0.0};
  return {s, 2.0 * tau1 - s, -tau1 * (s - tau1)};
}

Trajectory lightlike_trajectory(double tau1, double tau2, BrokenOrder order,
                                int n) {
  Trajectory traj;
  traj.tau1 = tau1;
  traj.tau2 = tau2;
  traj.order = order;
  traj.length = 0.0;
  const double total = tau1 + tau2;
  if (tau1 == 0.0 || tau2 == 0.0) {
    traj.kind = TrajectoryKind::LightlikeSingle;
    const bool plus_edge = (order == BrokenOrder::MinusThenPlus) == (tau1 == 0.0);
    traj.light_sign = plus_edge ? +1 : -1;
    for (int k = 0; k < n; ++k) {
      const double s = total * k / (n - 1);
      traj.samples.emplace_back(s, Point{s, traj.light_sign * s + 0.0, 0.0});
    }
    return traj;
  }
  traj.kind = TrajectoryKind::LightlikeBroken;
  for (int k = 0; k < n; ++k) {
    const double s = total * k / (n - 1);
    traj.samples.emplace_back(s, broken_at(s, tau1, order));
  }
  return traj;
}

}  // namespace

Trajectory maximizer(const Point& q, int n) {
  if (n < 2) throw BadGridError("maximizer: need at least 2 samples");
  switch (membership(q)) {
    case CausalMembership::Outside:
      throw UnreachableError("maximizer: target is outside the causal future");
    case CausalMembership::Origin:
      throw DegenerateTargetError("maximizer: target equals the identity");
    case CausalMembership::Interior: {
      Trajectory traj;
      traj.kind = TrajectoryKind::TimelikeNormal;
      traj.coords = exp_inverse(q);
      traj.length = traj.coords.t;
      traj.samples.emplace_back(0.0, Point{0.0, 0.0, 0.0});
      for (int k = 1; k < n; ++k) {
        const double s = traj.coords.t * k / (n - 1);
        traj.samples.emplace_back(
            s, exp_map({traj.coords.psi, traj.coords.c, s}));
      }
      return traj;
    }
    case CausalMembership::Boundary:
      break;
  }
  if (q.z == 0.0) {
    // Single edge along X1 + X2 (y > 0) or X1 - X2 (y < 0).
    if (q.y >= 0.0) return lightlike_trajectory(0.0, q.x, BrokenOrder::MinusThenPlus, n);
    return lightlike_trajectory(q.x, 0.0, BrokenOrder::MinusThenPlus, n);
  }
  if (q.z > 0.0)
    return lightlike_trajectory((q.x - q.y) / 2.0, (q.x + q.y) / 2.0,
                                BrokenOrder::MinusThenPlus, n);
  return lightlike_trajectory((q.x + q.y) / 2.0, (q.x - q.y) / 2.0,
                              BrokenOrder::PlusThenMinus, n);
}

ExtremalClass classify_extremal(const Trajectory& traj) {
  return traj.kind == TrajectoryKind::TimelikeNormal
             ? ExtremalClass::StrictlyNormal
             : ExtremalClass::NonstrictlyNormal;
}

Trajectory abnormal_family(double tau1, double tau2, BrokenOrder order, int n) {
  if (tau1 < 0.0 || tau2 < 0.0)
    throw NegativeParameterError("abnormal_family: edge times must be >= 0");
  if (n < 2) throw BadGridError("abnormal_family: need at least 2 samples");
  return lightlike_trajectory(tau1, tau2, order, n);
}

std::vector<std::pair<Control, double>> Trajectory::control_schedule() const {
  std::vector<std::pair<Control, double>> out;
  if (kind == TrajectoryKind::TimelikeNormal) {
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      const double s0 = samples[i].first;
      const double s1 = samples[i + 1].first;
      const double mid = coords.psi + coords.c * (s0 + s1) / 2.0;
      out.push_back({{std::cosh(mid), std::sinh(mid)}, s1 - s0});
    }
    return out;
  }
  if (kind == TrajectoryKind::LightlikeSingle) {
    const double total = samples.empty() ? 0.0 : samples.back().first;
    out.push_back({{1.0, static_cast<double>(light_sign)}, total});
    return out;
  }
  if (order == BrokenOrder::MinusThenPlus) {
    out.push_back({{1.0, -1.0}, tau1});
    out.push_back({{1.0, 1.0}, tau2});
  } else {
    out.push_back({{1.0, 1.0}, tau1});
    out.push_back({{1.0, -1.0}, tau2});
  }
  return out;
}

}  // namespace heis
