#pragma once

// Symmetries of the distance: hyperbolic rotations and two reflections
// preserve d, dilations scale it by e^s.

#include "heis/types.hpp"

namespace heis {

enum class SymmetryKind { Rotation, Reflection1, Reflection2, Dilation };

struct SymmetryElement {
  SymmetryKind kind = SymmetryKind::Rotation;
  double s = 0.0;  // parameter of Rotation / Dilation

  static SymmetryElement rotation(double s) { return {SymmetryKind::Rotation, s}; }
  static SymmetryElement reflection1() { return {SymmetryKind::Reflection1, 0.0}; }
  static SymmetryElement reflection2() { return {SymmetryKind::Reflection2, 0.0}; }
  static SymmetryElement dilation(double s) { return {SymmetryKind::Dilation, s}; }
};

// Action on points:
//   Rotation(s):   (x cosh s + y sinh s, x sinh s + y cosh s, z)
//   Reflection1:   (x, -y, z)
//   Reflection2:   (x, y, -z)
//   Dilation(s):   (x e^s, y e^s, z e^{2s})
Point apply(const SymmetryElement& g, const Point& q);

// Equivariant action on exponential coordinates, so that
// apply(g, exp_map(lc)) == exp_map(apply_exp_coords(g, lc)):
//   Rotation(s):   (psi + s, c, t)
//   Dilation(s):   (psi, c e^{-s}, t e^s)
//   Reflection1:   (-psi - c t, c, t)
//   Reflection2:   (psi + c t, -c, t)
ExpCoords apply_exp_coords(const SymmetryElement& g, const ExpCoords& lc);

}  // namespace heis
