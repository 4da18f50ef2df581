#pragma once

// Heisenberg group algebra, the left-invariant frame and the causal
// vocabulary of the Lorentzian metric g(v) = -v1^2 + v2^2 on the
// horizontal distribution span(X1, X2), with time orientation X1.

#include <array>
#include <vector>

#include "heis/types.hpp"

namespace heis {

// Group product (x1,y1,z1)*(x2,y2,z2) =
// (x1+x2, y1+y2, z1+z2+(x1 y2 - x2 y1)/2).
Point product(const Point& a, const Point& b);

// Group inverse, (-x, -y, -z).
Point inverse(const Point& a);

// Coordinate-basis components of X1, X2, X3 at q:
// X1 = (1, 0, -y/2), X2 = (0, 1, x/2), X3 = (0, 0, 1).
std::array<std::array<double, 3>, 3> frame_at(const Point& q);

// Causal class of a horizontal vector.  v must have v3 = 0; a positive
// tolerance widens the lightlike boundary |g(v)| <= tol (vectors inside
// the band with g unresolved report NonspacelikeOnly).
CausalClass classify(const FrameVector& v, double tol = 0.0);

// Frame components of a coordinate-basis vector at q.
FrameVector to_frame(const Point& q, const std::array<double, 3>& v);

// Sub-Lorentzian length of a piecewise-constant control schedule:
// sum of duration * sqrt(u1^2 - u2^2).  Every control must satisfy
// u1 >= |u2|.
double curve_length(const std::vector<std::pair<Control, double>>& schedule);

bool admissible(const Control& u);

}  // namespace heis
