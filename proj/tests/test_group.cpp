#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "heis/group.hpp"

using namespace heis;

namespace {

Point rand_point(std::mt19937_64& rng, double scale = 5.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

void check_close(const Point& a, const Point& b, double tol) {
  CHECK(std::fabs(a.x - b.x) <= tol * (1.0 + std::fabs(b.x)));
  CHECK(std::fabs(a.y - b.y) <= tol * (1.0 + std::fabs(b.y)));
  CHECK(std::fabs(a.z - b.z) <= tol * (1.0 + std::fabs(b.z)));
}

}  // namespace

TEST_CASE("product examples") {
  check_close(product({0, 0, 0}, {1, 2, 3}), {1, 2, 3}, 0.0);
  check_close(product({1, 0, 0}, {0, 1, 0}), {1, 1, 0.5}, 0.0);
  check_close(product({1, 0, 0}, {1, 0, 0}), {2, 0, 0}, 0.0);
}

TEST_CASE("inverse examples") {
  check_close(inverse({0, 0, 0}), {0, 0, 0}, 0.0);
  check_close(inverse({1, 2, 3}), {-1, -2, -3}, 0.0);
  check_close(product({1, 2, 3}, inverse({1, 2, 3})), {0, 0, 0}, 0.0);
  check_close(product(inverse({1, 1, 0}), {1, 1, 0}), {0, 0, 0}, 0.0);
}

TEST_CASE("group laws on random points") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Point a = rand_point(rng), b = rand_point(rng), c = rand_point(rng);
    check_close(product(product(a, b), c), product(a, product(b, c)), 1e-12);
    check_close(product(a, inverse(a)), {0, 0, 0}, 1e-12);
    check_close(product(inverse(a), a), {0, 0, 0}, 1e-12);
    check_close(product(a, {0, 0, 0}), a, 0.0);
    check_close(product({0, 0, 0}, a), a, 0.0);
  }
}

TEST_CASE("frame at a point") {
  const auto at0 = frame_at({0, 0, 0});
  CHECK(at0[0] == std::array<double, 3>{1, 0, 0});
  CHECK(at0[1] == std::array<double, 3>{0, 1, 0});
  CHECK(at0[2] == std::array<double, 3>{0, 0, 1});
  const auto at = frame_at({2, 4, 0});
  CHECK(at[0] == std::array<double, 3>{1, 0, -2});
  CHECK(at[1] == std::array<double, 3>{0, 1, 1});
}

TEST_CASE("finite-difference Lie bracket [X1, X2] = X3") {
  // Commutator of flows: follow X1, X2, -X1, -X2 for time h each; the
  // displacement is h^2 [X1, X2] + O(h^3).
  std::mt19937_64 rng(2);
  auto flow = [](Point q, int field, double h) {
    // Exact flows of the left-invariant fields: right translation by
    // (h,0,0) resp. (0,h,0).
    if (field == 1) return product(q, {h, 0, 0});
    return product(q, {0, h, 0});
  };
  for (int i = 0; i < 20; ++i) {
    const Point q = rand_point(rng);
    const double h = 1e-3;
    Point p = flow(flow(flow(flow(q, 1, h), 2, h), 1, -h), 2, -h);
    const double bx = (p.x - q.x) / (h * h);
    const double by = (p.y - q.y) / (h * h);
    const double bz = (p.z - q.z) / (h * h);
    CHECK(std::fabs(bx) <= 1e-9);
    CHECK(std::fabs(by) <= 1e-9);
    CHECK(bz == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("classify examples") {
  CausalClass cc = classify({1, 0, 0});
  CHECK(cc.kind == CausalKind::Timelike);
  CHECK(cc.orientation == Orientation::FutureDirected);
  cc = classify({1, 1, 0});
  CHECK(cc.kind == CausalKind::Lightlike);
  CHECK(cc.orientation == Orientation::FutureDirected);
  cc = classify({0, 1, 0});
  CHECK(cc.kind == CausalKind::Spacelike);
  CHECK(cc.orientation == Orientation::NotApplicable);
  cc = classify({-2, 1, 0});
  CHECK(cc.kind == CausalKind::Timelike);
  CHECK(cc.orientation == Orientation::PastDirected);
  // The zero vector is spacelike by convention.
  CHECK(classify({0, 0, 0}).kind == CausalKind::Spacelike);
}

TEST_CASE("classify rejects non-horizontal vectors") {
  CHECK_THROWS_AS(classify({1, 0, 0.5}), NonHorizontalError);
}

TEST_CASE("classify is scale invariant") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> us(0.1, 100.0);
  for (int i = 0; i < 200; ++i) {
    const FrameVector v{u(rng), u(rng), 0.0};
    const double s = us(rng);
    const CausalClass a = classify(v);
    const CausalClass b = classify({s * v.v1, s * v.v2, 0.0});
    CHECK(a.kind == b.kind);
    CHECK(a.orientation == b.orientation);
  }
}

TEST_CASE("classify with tolerance band") {
  // g = -1e-14 is inside the band: not resolvable against lightlike.
  const CausalClass cc = classify({1.0, std::sqrt(1.0 - 1e-14), 0.0}, 1e-10);
  CHECK(cc.kind == CausalKind::NonspacelikeOnly);
  CHECK(cc.orientation == Orientation::FutureDirected);
  CHECK(classify({1, 0, 0}, 1e-10).kind == CausalKind::Timelike);
}

TEST_CASE("to_frame inverts frame_at") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Point q = rand_point(rng);
    const auto X = frame_at(q);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const double a = u(rng), b = u(rng), c = u(rng);
    const std::array<double, 3> v{
        a * X[0][0] + b * X[1][0] + c * X[2][0],
        a * X[0][1] + b * X[1][1] + c * X[2][1],
        a * X[0][2] + b * X[1][2] + c * X[2][2]};
    const FrameVector fv = to_frame(q, v);
    CHECK(fv.v1 == doctest::Approx(a).epsilon(1e-12).scale(1.0));
    CHECK(fv.v2 == doctest::Approx(b).epsilon(1e-12).scale(1.0));
    CHECK(fv.v3 == doctest::Approx(c).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("curve_length examples") {
  CHECK(curve_length({{{1, 0}, 2.0}}) == doctest::Approx(2.0));
  CHECK(curve_length({{{1, 1}, 5.0}}) == 0.0);
  CHECK(curve_length({{{std::cosh(1.0), std::sinh(1.0)}, 3.0}}) ==
        doctest::Approx(3.0).epsilon(1e-14));
  CHECK_THROWS_AS(curve_length({{{0.5, 1.0}, 1.0}}), InadmissibleControlError);
}
