#include "heis/symmetry.hpp"

#include <cmath>

namespace heis {

Point apply(const SymmetryElement& g, const Point& q) {
  switch (g.kind) {
    case SymmetryKind::Rotation: {
      const double ch = std::cosh(g.s);
      const double sh = std::sinh(g.s);
      return {q.x * ch + q.y * sh, q.x * sh + q.y * ch, q.z};
    }
    case SymmetryKind::Reflection1:
      return {q.x, -q.y, q.z};
    case SymmetryKind::Reflection2:
      return {q.x, q.y, -q.z};
    case SymmetryKind::Dilation: {
      const double e = std::exp(g.s);
      return {q.x * e, q.y * e, q.z * e * e};
    }
  }
  return q;
}

ExpCoords apply_exp_coords(const SymmetryElement& g, const ExpCoords& lc) {
  switch (g.kind) {
    case SymmetryKind::Rotation:
      return {lc.psi + g.s, lc.c, lc.t};
    case SymmetryKind::Reflection1:
      return {-lc.psi - lc.c * lc.t, lc.c, lc.t};
    case SymmetryKind::Reflection2:
      return {lc.psi + lc.c * lc.t, -lc.c, lc.t};
    case SymmetryKind::Dilation: {
      // c t is invariant and x scales by e^s, forcing c -> c e^{-s}.
      const double e = std::exp(g.s);
      return {lc.psi, lc.c / e, lc.t * e};
    }
  }
  return lc;
}

}  // namespace heis
