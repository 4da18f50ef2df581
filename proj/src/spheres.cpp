#include "heis/spheres.hpp"

#include <cmath>

#include "heis/scalar_math.hpp"

namespace heis {

double a_profile(double c) { return scalar::a_fn(c); }
double b_profile(double z) { return scalar::b_fn(z); }
double k_profile(double z) { return scalar::k_fn(z); }
double e_profile(double w) { return scalar::e_fn(w); }
double f_profile(double z) { return scalar::f_fn(z); }

double sphere_x(double y, double z, double R) {
  if (R < 0.0) throw NegativeParameterError("sphere_x: radius must be >= 0");
  if (R == 0.0) return std::sqrt(y * y + 4.0 * std::fabs(z));
  return std::sqrt(y * y + R * R * f_profile(z / (R * R)));
}

SphereMesh sphere_mesh(double R, std::array<double, 2> y_range,
                       std::array<double, 2> z_range, int ny, int nz) {
  if (R < 0.0) throw NegativeParameterError("sphere_mesh: radius must be >= 0");
  if (ny < 2 || nz < 2 || !std::isfinite(y_range[0]) ||
      !std::isfinite(y_range[1]) || !std::isfinite(z_range[0]) ||
      !std::isfinite(z_range[1]) || y_range[1] <= y_range[0] ||
      z_range[1] <= z_range[0])
    throw BadGridError("sphere_mesh: need finite increasing ranges and ny, nz >= 2");
  SphereMesh mesh;
  mesh.R = R;
  mesh.ny = ny;
  mesh.nz = nz;
  mesh.y_range = y_range;
  mesh.z_range = z_range;
  mesh.vertices.reserve(static_cast<std::size_t>(ny) * nz);
  for (int iy = 0; iy < ny; ++iy) {
    const double y = y_range[0] + (y_range[1] - y_range[0]) * iy / (ny - 1);
    for (int iz = 0; iz < nz; ++iz) {
      const double z = z_range[0] + (z_range[1] - z_range[0]) * iz / (nz - 1);
      mesh.vertices.push_back({sphere_x(y, z, R), y, z});
    }
  }
  for (int iy = 0; iy + 1 < ny; ++iy)
    for (int iz = 0; iz + 1 < nz; ++iz)
      mesh.quads.push_back({iy * nz + iz, iy * nz + iz + 1,
                            (iy + 1) * nz + iz + 1, (iy + 1) * nz + iz});
  return mesh;
}

namespace {

// Largest |z| on the x = x0 section: solves R^2 f(z/R^2) = x0^2 (or
// 4|z| = x0^2 for R = 0) by bisection on the even increasing profile.
double section_z_extent(double R, double x0) {
  if (R == 0.0) return x0 * x0 / 4.0;
  const double target = (x0 / R) * (x0 / R);
  double lo = 0.0, hi = 1.0;
  while (f_profile(hi) < target) hi *= 2.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * (1.0 + hi); ++i) {
    const double mid = (lo + hi) / 2.0;
    (f_profile(mid) < target ? lo : hi) = mid;
  }
  return R * R * (lo + hi) / 2.0;
}

}  // namespace

std::vector<Point> sphere_section(double R, const SectionPlane& plane, int n,
                                  double span) {
  if (R < 0.0) throw NegativeParameterError("sphere_section: radius must be >= 0");
  if (n < 2) throw BadGridError("sphere_section: need at least 2 samples");
  std::vector<Point> pts;
  pts.reserve(n);
  switch (plane.type) {
    case SectionPlane::Type::ZConst: {
      const double z = plane.value;
      for (int k = 0; k < n; ++k) {
        const double y = -span + 2.0 * span * k / (n - 1);
        pts.push_back({sphere_x(y, z, R), y, z});
      }
      return pts;
    }
    case SectionPlane::Type::XConst: {
      const double x0 = plane.value;
      if (x0 <= R)
        throw EmptySectionError("sphere_section: plane x = const misses the sphere");
      if (n < 4) throw BadGridError("sphere_section: closed sections need n >= 4");
      const double zmax = section_z_extent(R, x0);
      // Closed curve: upper branch y >= 0 left to right in z, then the
      // lower branch back.
      const int half = n / 2;
      for (int k = 0; k < half; ++k) {
        const double z = zmax - 2.0 * zmax * k / (half - 1);
        const double xs = sphere_x(0.0, z, R);
        const double y2 = (x0 - xs) * (x0 + xs);
        pts.push_back({x0, std::sqrt(std::fmax(0.0, y2)), z});
      }
      for (int k = 0; k < n - half; ++k) {
        const double z = -zmax + 2.0 * zmax * k / (n - half - 1);
        const double xs = sphere_x(0.0, z, R);
        const double y2 = (x0 - xs) * (x0 + xs);
        pts.push_back({x0, -std::sqrt(std::fmax(0.0, y2)), z});
      }
      return pts;
    }
    case SectionPlane::Type::YSlope: {
      const double k_slope = plane.value;
      if (std::fabs(k_slope) >= 1.0)
        throw EmptySectionError(
            "sphere_section: plane y = kx with |k| >= 1 meets only the origin");
      const double denom = 1.0 - k_slope * k_slope;
      for (int k = 0; k < n; ++k) {
        const double z = -span + 2.0 * span * k / (n - 1);
        double x;
        if (R == 0.0)
          x = std::sqrt(4.0 * std::fabs(z) / denom);
        else
          x = std::sqrt(R * R * f_profile(z / (R * R)) / denom);
        pts.push_back({x, k_slope * x, z});
      }
      return pts;
    }
  }
  return pts;
}

double sphere_gap(double R1, double R2, double y, double z) {
  if (R1 < 0.0 || R2 < 0.0)
    throw NegativeParameterError("sphere_gap: radii must be >= 0");
  return std::fabs(sphere_x(y, z, R1) - sphere_x(y, z, R2));
}

}  // namespace heis
