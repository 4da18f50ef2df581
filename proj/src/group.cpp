#include "heis/group.hpp"

#include <cmath>

namespace heis {

Point product(const Point& a, const Point& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z + (a.x * b.y - b.x * a.y) / 2.0};
}

Point inverse(const Point& a) { return {-a.x, -a.y, -a.z}; }

std::array<std::array<double, 3>, 3> frame_at(const Point& q) {
  return {{{1.0, 0.0, -q.y / 2.0}, {0.0, 1.0, q.x / 2.0}, {0.0, 0.0, 1.0}}};
}

CausalClass classify(const FrameVector& v, double tol) {
  if (v.v3 != 0.0)
    throw NonHorizontalError("classify: vector has a nonzero X3 component");
  const bool zero = v.v1 == 0.0 && v.v2 == 0.0;
  const double g = (v.v2 - v.v1) * (v.v2 + v.v1);  // -v1^2 + v2^2

  CausalClass out;
  if (zero || g > tol) {
    out.kind = CausalKind::Spacelike;
    out.orientation = Orientation::NotApplicable;
    return out;
  }
  if (g < -tol)
    out.kind = CausalKind::Timelike;
  else
    out.kind = (tol == 0.0) ? CausalKind::Lightlike : CausalKind::NonspacelikeOnly;
  out.orientation = v.v1 > 0.0 ? Orientation::FutureDirected
                               : Orientation::PastDirected;
  return out;
}

FrameVector to_frame(const Point& q, const std::array<double, 3>& v) {
  // Solve v = v1 X1 + v2 X2 + v3 X3 at q.
  const double v1 = v[0];
  const double v2 = v[1];
  const double v3 = v[2] + q.y * v[0] / 2.0 - q.x * v[1] / 2.0;
  return {v1, v2, v3};
}

bool admissible(const Control& u) { return u.u1 >= std::fabs(u.u2); }

double curve_length(const std::vector<std::pair<Control, double>>& schedule) {
  double total = 0.0;
  for (const auto& [u, dt] : schedule) {
    if (!admissible(u))
      throw InadmissibleControlError("curve_length: control violates u1 >= |u2|");
    total += dt * std::sqrt((u.u1 - u.u2) * (u.u1 + u.u2));
  }
  return total;
}

}  // namespace heis
