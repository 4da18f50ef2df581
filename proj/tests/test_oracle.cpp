#include <doctest.h>

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <random>

#include "heis/distance.hpp"
#include "heis/exponential.hpp"
#include "heis/oracle.hpp"
#include "heis/synthesis.hpp"

using namespace heis;

namespace {

double pt_dist(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

// Reference integration of the control system for flow_constant checks.
Point integrate_control(const Point& q0, const Control& u, double dt) {
  using State = std::array<double, 3>;
  State s{q0.x, q0.y, q0.z};
  auto rhs = [&](const State& st, State& ds, double) {
    ds = {u.u1, u.u2, (st[0] * u.u2 - st[1] * u.u1) / 2.0};
  };
  boost::numeric::odeint::integrate_adaptive(
      boost::numeric::odeint::make_controlled(
          1e-13, 1e-13, boost::numeric::odeint::runge_kutta_dopri5<State>()),
      rhs, s, 0.0, dt, dt / 16.0);
  return {s[0], s[1], s[2]};
}

}  // namespace

TEST_CASE("flow_constant examples") {
  const Point a = flow_constant({0, 0, 0}, {1, 1}, 3.0);
  CHECK(a.x == 3.0);
  CHECK(a.y == 3.0);
  CHECK(a.z == 0.0);

  const Point b = flow_constant({1, -1, 0}, {1, 1}, 1.0);
  CHECK(b.x == 2.0);
  CHECK(b.y == 0.0);
  CHECK(b.z == 1.0);

  const Point c = flow_constant({0.3, -0.8, 0.1}, {2, 1}, 0.0);
  CHECK(pt_dist(c, {0.3, -0.8, 0.1}) == 0.0);

  CHECK_THROWS_AS(flow_constant({0, 0, 0}, {0.5, 1.0}, 1.0),
                  InadmissibleControlError);
  CHECK_THROWS_AS(flow_constant({0, 0, 0}, {1, 0}, -1.0), NegativeParameterError);
}

TEST_CASE("flow_constant matches adaptive integration") {
  std::mt19937_64 rng(70);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> ud(0.1, 2.0);
  for (int i = 0; i < 100; ++i) {
    const Point q{u(rng), u(rng), u(rng)};
    const double u2 = u(rng);
    const Control ctrl{std::fabs(u2) + ud(rng), u2};
    const double dt = ud(rng);
    CHECK(pt_dist(flow_constant(q, ctrl, dt), integrate_control(q, ctrl, dt)) <
          1e-12);
  }
}

TEST_CASE("simulate examples") {
  const auto broken = simulate({{{1, -1}, 1.0}, {{1, 1}, 1.0}});
  CHECK(pt_dist(broken.endpoint, {2, 0, 1}) == 0.0);
  CHECK(broken.length == 0.0);

  const double psi = 0.8, t = 1.7;
  const auto ray = simulate({{{std::cosh(psi), std::sinh(psi)}, t}});
  CHECK(ray.endpoint.x == doctest::Approx(t * std::cosh(psi)).epsilon(1e-15));
  CHECK(ray.endpoint.y == doctest::Approx(t * std::sinh(psi)).epsilon(1e-15));
  CHECK(std::fabs(ray.endpoint.z) <= 1e-15);
  CHECK(ray.length == doctest::Approx(t).epsilon(1e-14));

  const auto empty = simulate({});
  CHECK(pt_dist(empty.endpoint, {0, 0, 0}) == 0.0);
  CHECK(empty.length == 0.0);
}

TEST_CASE("brute force on a straight target") {
  for (int pieces : {1, 2, 4, 8}) {
    BruteForceOptions opts;
    opts.pieces = pieces;
    const BruteForceResult r = brute_force_distance({2, 0, 0}, opts);
    CHECK(r.length == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.endpoint_error < 1e-9);
  }
}

TEST_CASE("brute force reaches within 2% on an interior target") {
  const Point q = exp_map({0.5, 1.0, 2.0});
  BruteForceOptions opts;
  opts.pieces = 32;
  const BruteForceResult r = brute_force_distance(q, opts);
  const double d = distance(q).value;  // = 2.0
  CHECK(d == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.length <= d * (1.0 + 1e-6) + opts.tol);
  CHECK(r.length > 0.98 * d);
}

TEST_CASE("brute force on a beak target approaches zero") {
  BruteForceOptions opts;
  opts.pieces = 32;
  opts.tol = 1e-6;
  const BruteForceResult r = brute_force_distance({2, 0, 1}, opts);
  CHECK(r.length < 0.05);
}

TEST_CASE("monotone improvement under nested refinement") {
  const Point q = exp_map({0.2, 1.5, 1.5});
  BruteForceOptions opts;
  opts.pieces = 8;
  const BruteForceResult coarse = brute_force_distance(q, opts);
  // Duplicate each piece: same schedule on the doubled grid.
  BruteForceOptions fine = opts;
  fine.pieces = 16;
  fine.seed_u2.reserve(16);
  for (double v : coarse.u2) {
    fine.seed_u2.push_back(v);
    fine.seed_u2.push_back(v);
  }
  const BruteForceResult refined = brute_force_distance(q, fine);
  CHECK(refined.length >= coarse.length - 1e-12);
}

TEST_CASE("brute force error cases") {
  CHECK_THROWS_AS(brute_force_distance({0, 1, 0}, {}), UnreachableError);
  BruteForceOptions bad;
  bad.pieces = 0;
  CHECK_THROWS_AS(brute_force_distance({1, 0, 0}, bad), BadGridError);
  // One piece cannot produce z != 0: infeasible by construction.
  BruteForceOptions one;
  one.pieces = 1;
  CHECK_THROWS_AS(brute_force_distance({2, 0, 0.5}, one), NoFeasibleScheduleError);
}

TEST_CASE("maximizer schedules replay through simulate") {
  const Trajectory light = maximizer({2, 0, 1}, 17);
  const auto sim = simulate(light.control_schedule());
  CHECK(pt_dist(sim.endpoint, {2, 0, 1}) == 0.0);
  CHECK(sim.length == 0.0);

  const Point q = exp_map({0.3, 0.8, 1.2});
  double prev = 1e300;
  for (int n : {8, 16, 32, 64}) {
    const Trajectory tr = maximizer(q, n + 1);
    const double defect = pt_dist(simulate(tr.control_schedule()).endpoint, q);
    CHECK(defect < prev);
    prev = defect;
  }
  // Piecewise-constant replay of a curved arc converges at O(1/n^2).
  CHECK(prev < 1e-4);
}
