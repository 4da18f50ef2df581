#pragma once

#include <stdexcept>
#include <string>

namespace heis {

// Group element of the Heisenberg group in exponential coordinates.
struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Tangent vector expressed in the left-invariant frame (X1, X2, X3).
struct FrameVector {
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;
};

// Momentum covector (h1, h2, h3) on the fiber over a point.
struct Covector {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
};

// Coordinates (psi, c, t) on the cylinder of arclength-parametrized
// timelike extremals: psi is the hyperbolic angle of the initial
// momentum, c = h3, t > 0 the arclength time.
struct ExpCoords {
  double psi = 0.0;
  double c = 0.0;
  double t = 0.0;
};

struct Control {
  double u1 = 0.0;
  double u2 = 0.0;
};

enum class CausalKind {
  Timelike,
  Spacelike,
  Lightlike,
  // With a positive tolerance a vector whose g-value lies inside the
  // tolerance band cannot be resolved between timelike and lightlike;
  // it is only known to be nonspacelike.
  NonspacelikeOnly,
};

enum class Orientation {
  FutureDirected,
  PastDirected,
  NotApplicable,
};

struct CausalClass {
  CausalKind kind = CausalKind::Spacelike;
  Orientation orientation = Orientation::NotApplicable;
};

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonHorizontalError : Error {
  using Error::Error;
};
struct InadmissibleControlError : Error {
  using Error::Error;
};
struct NegativeParameterError : Error {
  using Error::Error;
};
struct NonpositiveTimeError : Error {
  using Error::Error;
};
struct OutOfDomainError : Error {
  using Error::Error;
};
struct NotInteriorError : Error {
  using Error::Error;
};
struct UnreachableError : Error {
  using Error::Error;
};
struct DegenerateTargetError : Error {
  using Error::Error;
};
struct BadGridError : Error {
  using Error::Error;
};
struct EmptySectionError : Error {
  using Error::Error;
};
struct NoFeasibleScheduleError : Error {
  using Error::Error;
};

}  // namespace heis
