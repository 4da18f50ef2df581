#pragma once

// Spheres of the sub-Lorentzian distance.  A sphere of radius R > 0 is
// the graph x = sqrt(y^2 + R^2 f(z/R^2)) with the profile
// f = e o k, k = b/2, b = a^{-1}, a(c) = (sinh c - c)/(2c^2); the
// zero-radius sphere is the boundary surface x = sqrt(y^2 + 4|z|).

#include <array>
#include <vector>

#include "heis/types.hpp"

namespace heis {

double a_profile(double c);
double b_profile(double z);
double k_profile(double z);
double e_profile(double w);

// f(z) = e(k(z)); even, f(0) = 1, 4|z| < f(z) < 4|z| + 1 for z != 0.
double f_profile(double z);

// Height of the sphere S(R) over (y, z); R = 0 gives the boundary
// surface.
double sphere_x(double y, double z, double R);

struct SphereMesh {
  double R = 0.0;
  int ny = 0;
  int nz = 0;
  std::array<double, 2> y_range{};
  std::array<double, 2> z_range{};
  // Row-major over (iy, iz): vertex index iy * nz + iz.
  std::vector<Point> vertices;
  std::vector<std::array<int, 4>> quads;
};

SphereMesh sphere_mesh(double R, std::array<double, 2> y_range,
                       std::array<double, 2> z_range, int ny, int nz);

struct SectionPlane {
  enum class Type { ZConst, XConst, YSlope };
  Type type = Type::ZConst;
  double value = 0.0;  // the constant, or the slope k of y = k x
};

// Sampled section curve of S(R) by the given plane; span bounds the
// free parameter (y for z-sections, z for slope sections).
// Throws EmptySectionError when the plane misses the sphere.
std::vector<Point> sphere_section(double R, const SectionPlane& plane, int n,
                                  double span = 3.0);

// |sphere_x(y,z,R1) - sphere_x(y,z,R2)|; tends to 0 as z -> infinity.
double sphere_gap(double R1, double R2, double y, double z);

}  // namespace heis
