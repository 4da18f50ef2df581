#include <doctest.h>

#include <cmath>
#include <random>

#include "heis/causal.hpp"
#include "heis/distance.hpp"
#include "heis/exponential.hpp"
#include "heis/spheres.hpp"

using namespace heis;

TEST_CASE("profile scalar functions") {
  CHECK(a_profile(0.0) == 0.0);
  CHECK(a_profile(1.0) ==
        doctest::Approx((std::sinh(1.0) - 1.0) / 2.0).epsilon(1e-15));
  // a o b and b o a are identities.
  for (double z : {1e-6, 0.01, 0.3, 2.0, 50.0}) {
    CHECK(a_profile(b_profile(z)) == doctest::Approx(z).epsilon(1e-11));
    CHECK(a_profile(b_profile(-z)) == doctest::Approx(-z).epsilon(1e-11));
  }
  for (double c : {0.1, 1.0, 4.0, 10.0})
    CHECK(b_profile(a_profile(c)) == doctest::Approx(c).epsilon(1e-11));
  // Leading order b(z) = 12z.
  CHECK(b_profile(1e-9) / 1e-9 == doctest::Approx(12.0).epsilon(1e-6));
  CHECK(e_profile(0.0) == 1.0);
  CHECK(k_profile(0.5) == doctest::Approx(b_profile(0.5) / 2.0).epsilon(1e-15));
}

TEST_CASE("f_profile examples") {
  CHECK(f_profile(0.0) == 1.0);
  const double f5 = f_profile(5.0);
  CHECK(f5 > 20.0);
  CHECK(f5 < 21.0);
  // f(z) - 4|z| decreases towards 0 along z = 10, 100, 1000.
  const double g10 = f_profile(10.0) - 40.0;
  const double g100 = f_profile(100.0) - 400.0;
  const double g1000 = f_profile(1000.0) - 4000.0;
  CHECK(g10 > g100);
  CHECK(g100 > g1000);
  CHECK(g1000 > 0.0);
  CHECK(g10 < 1.0);
}

TEST_CASE("f bounds, symmetry, monotonicity and convexity") {
  std::mt19937_64 rng(60);
  std::uniform_real_distribution<double> uz(-100.0, 100.0);
  for (int i = 0; i < 500; ++i) {
    const double z = uz(rng);
    if (z == 0.0) continue;
    const double f = f_profile(z);
    CHECK(f > 4.0 * std::fabs(z));
    CHECK(f < 4.0 * std::fabs(z) + 1.0);
    CHECK(f_profile(-z) == f);
  }
  // Central differences on (0, 100].
  const double h = 1e-3;
  for (double z = 0.5; z <= 100.0; z *= 1.7) {
    const double fm = f_profile(z - h), f0 = f_profile(z), fp = f_profile(z + h);
    CHECK((fp - fm) / (2 * h) > 0.0);
    CHECK((fp - 2 * f0 + fm) / (h * h) > 0.0);
  }
}

TEST_CASE("f Taylor expansion f(z) = 1 + 12z^2 + O(z^4)") {
  double bound = 0.0;
  for (double z = 0.001; z <= 0.1; z += 0.001) {
    const double rem = std::fabs(f_profile(z) - 1.0 - 12.0 * z * z);
    bound = std::fmax(bound, rem / (z * z * z * z));
  }
  CHECK(bound > 0.0);
  CHECK(bound < 1e4);
}

TEST_CASE("sphere_x examples") {
  CHECK(sphere_x(0, 0, 1) == 1.0);
  CHECK(sphere_x(0, 0, 2) == 2.0);
  const double x = sphere_x(0, 1, 1);
  CHECK(x > 2.0);
  CHECK(x < std::sqrt(5.0));
  CHECK(sphere_x(3, 0, 0) == 3.0);
  CHECK_THROWS_AS(sphere_x(0, 0, -1), NegativeParameterError);
}

TEST_CASE("sphere_mesh basics") {
  const SphereMesh m = sphere_mesh(1.0, {-1, 1}, {-1, 1}, 3, 3);
  REQUIRE(m.vertices.size() == 9);
  CHECK(m.quads.size() == 4);
  const Point center = m.vertices[1 * 3 + 1];
  CHECK(center.x == 1.0);
  CHECK(center.y == 0.0);
  CHECK(center.z == 0.0);
  CHECK_THROWS_AS(sphere_mesh(1.0, {-1, 1}, {-1, 1}, 1, 3), BadGridError);
  CHECK_THROWS_AS(sphere_mesh(1.0, {1, -1}, {-1, 1}, 3, 3), BadGridError);
}

TEST_CASE("unit sphere mesh vertices have distance 1") {
  const SphereMesh m = sphere_mesh(1.0, {-2, 2}, {-2, 2}, 15, 15);
  for (const Point& v : m.vertices)
    CHECK(distance(v).value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("zero sphere mesh vertices satisfy 16 z^2 = (x^2 - y^2)^2") {
  const SphereMesh m = sphere_mesh(0.0, {-2, 2}, {-2, 2}, 15, 15);
  for (const Point& v : m.vertices) {
    const double xy2 = (v.x - v.y) * (v.x + v.y);
    CHECK(std::fabs(16.0 * v.z * v.z - xy2 * xy2) <
          1e-10 * (1.0 + v.x * v.x * v.x * v.x));
    CHECK(membership(v) != CausalMembership::Outside);
    CHECK(membership(v) != CausalMembership::Interior);
  }
}

TEST_CASE("sections") {
  // z = 0 section of S(1): hyperbola x^2 - y^2 = 1.
  for (const Point& p :
       sphere_section(1.0, {SectionPlane::Type::ZConst, 0.0}, 21)) {
    CHECK((p.x - p.y) * (p.x + p.y) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // y = 0 section of S(0): half-parabolas 4|z| = x^2.
  for (const Point& p :
       sphere_section(0.0, {SectionPlane::Type::YSlope, 0.0}, 21, 2.0)) {
    CHECK(4.0 * std::fabs(p.z) == doctest::Approx(p.x * p.x).epsilon(1e-12));
    CHECK(p.y == 0.0);
  }
  // Slanted plane y = k x on S(0): 4z = +-(1 - k^2) x^2.
  for (const Point& p :
       sphere_section(0.0, {SectionPlane::Type::YSlope, 0.5}, 21, 2.0)) {
    CHECK(4.0 * std::fabs(p.z) ==
          doctest::Approx((1.0 - 0.25) * p.x * p.x).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(0.5 * p.x).epsilon(1e-15));
  }
  // x = const section of S(1): closed curve on the sphere.
  const auto ring = sphere_section(1.0, {SectionPlane::Type::XConst, 2.0}, 40);
  for (const Point& p : ring) {
    CHECK(p.x == 2.0);
    CHECK(distance(p).value == doctest::Approx(1.0).epsilon(1e-7));
  }
  CHECK_THROWS_AS(sphere_section(1.0, {SectionPlane::Type::XConst, 0.5}, 40),
                  EmptySectionError);
  CHECK_THROWS_AS(sphere_section(1.0, {SectionPlane::Type::YSlope, 1.0}, 21),
                  EmptySectionError);
  CHECK_THROWS_AS(sphere_section(1.0, {SectionPlane::Type::ZConst, 0.0}, 1),
                  BadGridError);
}

TEST_CASE("sphere_gap examples and decay") {
  CHECK(sphere_gap(1.0, 1.0, 0.3, 2.0) == 0.0);
  CHECK(sphere_gap(1.0, 0.0, 0.0, 0.0) == 1.0);
  double prev = 1.0;
  for (double z : {10.0, 100.0, 1000.0, 10000.0}) {
    const double g = sphere_gap(1.0, 0.0, 0.0, z);
    CHECK(g < prev);
    // From the envelope bound: gap < 1/(2 sqrt(4 z)) < 1/(2 sqrt z).
    CHECK(g < 0.5 / std::sqrt(z));
    prev = g;
  }
}

TEST_CASE("tangent plane of the unit sphere at an Exp point") {
  // The terminal covector has frame components h_i = lambda(X_i) equal to
  // (-cosh(psi+c), sinh(psi+c), c); in coordinates lambda_x = h1 + (y/2) h3,
  // lambda_y = h2 - (x/2) h3, lambda_z = h3.  It annihilates finite-difference
  // tangents of the graph x = sqrt(y^2 + f(z)).
  for (double psi : {-0.5, 0.0, 0.8}) {
    for (double c : {-1.0, 0.5, 2.0}) {
      const Point q = exp_map({psi, c, 1.0});
      const double h1 = -std::cosh(psi + c);
      const double h2 = std::sinh(psi + c);
      const double lx = h1 + (q.y / 2.0) * c;
      const double ly = h2 - (q.x / 2.0) * c;
      const double h = 1e-6;
      auto xs = [&](double y, double z) { return sphere_x(y, z, 1.0); };
      // Tangents along the y and z parameter directions: (dx/dy, 1, 0)
      // and (dx/dz, 0, 1).
      const double dxdy = (xs(q.y + h, q.z) - xs(q.y - h, q.z)) / (2 * h);
      const double dxdz = (xs(q.y, q.z + h) - xs(q.y, q.z - h)) / (2 * h);
      const double ry = lx * dxdy + ly;
      const double rz = lx * dxdz + c;
      CHECK(std::fabs(ry) < 1e-4);
      CHECK(std::fabs(rz) < 1e-4);
    }
  }
}

TEST_CASE("ball volume integrand grows over nested boxes") {
  // Integrate sqrt(y^2 + f(z)) - sqrt(y^2 + 4|z|) over [-L, L]^2 boxes.
  double prev = 0.0;
  for (double L : {2.0, 4.0, 8.0}) {
    const int n = 40;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double y = -L + 2.0 * L * (i + 0.5) / n;
        const double z = -L + 2.0 * L * (j + 0.5) / n;
        sum += (sphere_x(y, z, 1.0) - sphere_x(y, z, 0.0)) *
               (2.0 * L / n) * (2.0 * L / n);
      }
    CHECK(sum > prev);
    prev = sum;
  }
}
