#include "heis/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "heis/causal.hpp"
#include "heis/exponential.hpp"
#include "heis/group.hpp"

namespace heis {

Point flow_constant(const Point& q, const Control& u, double dt) {
  if (!admissible(u))
    throw InadmissibleControlError("flow_constant: need u1 >= |u2|");
  if (dt < 0.0) throw NegativeParameterError("flow_constant: need dt >= 0");
  // x, y move linearly, and d/dt (x u2 - y u1) = u1 u2 - u2 u1 = 0, so
  // the z increment is exactly (x u2 - y u1) dt / 2.
  return {q.x + u.u1 * dt, q.y + u.u2 * dt,
          q.z + (q.x * u.u2 - q.y * u.u1) * dt / 2.0};
}

ScheduleResult simulate(const std::vector<std::pair<Control, double>>& schedule) {
  ScheduleResult r;
  for (const auto& [u, dt] : schedule) r.endpoint = flow_constant(r.endpoint, u, dt);
  r.length = curve_length(schedule);
  return r;
}

namespace {

// The search space: u1 == 1, uniform piece duration dt = x/n, decision
// variables v_j = u2 of piece j in [-1, 1].  The endpoint is linear in v:
//   y = dt * sum v_j,   z = (dt^2/2) * sum (2j - n + 1) v_j,
// so feasibility is an affine slab cut by the box, and the length
// dt * sum sqrt(1 - v_j^2) is strictly concave.

struct Problem {
  int n;
  double dt;
  double A;    // required sum v_j
  double B;    // required sum w_j v_j
  double Sw2;  // sum w_j^2 = n(n^2-1)/3

  double w(int j) const { return 2.0 * j - n + 1.0; }

  // One exact projection onto the affine constraints (the two rows are
  // orthogonal since sum w_j = 0).
  void project(std::vector<double>& v) const {
    double s = 0.0, sw = 0.0;
    for (int j = 0; j < n; ++j) {
      s += v[j];
      sw += w(j) * v[j];
    }
    const double r1 = (s - A) / n;
    const double r2 = Sw2 > 0.0 ? (sw - B) / Sw2 : 0.0;  // n == 1: w == 0
    for (int j = 0; j < n; ++j) v[j] -= r1 + r2 * w(j);
  }

  // Alternating projection between the affine slab and the box.
  void make_feasible(std::vector<double>& v) const {
    for (int it = 0; it < 400; ++it) {
      project(v);
      bool clamped = false;
      for (double& vj : v) {
        if (vj > 1.0 || vj < -1.0) {
          vj = std::clamp(vj, -1.0, 1.0);
          clamped = true;
        }
      }
      if (!clamped) return;
    }
  }

  // Euclidean norm of the endpoint miss left by v.
  double residual(const std::vector<double>& v) const {
    double s = 0.0, sw = 0.0;
    for (int j = 0; j < n; ++j) {
      s += v[j];
      sw += w(j) * v[j];
    }
    const double ey = (s - A) * dt;
    const double ez = (sw - B) * dt * dt / 2.0;
    return std::hypot(ey, ez);
  }

  double length(const std::vector<double>& v) const {
    double s = 0.0;
    for (double vj : v) s += std::sqrt(std::fmax(0.0, (1.0 - vj) * (1.0 + vj)));
    return dt * s;
  }
};

// Maximize the three-coordinate slice of the length along the feasible
// direction d supported on (i, j, k); golden-section on the box-limited
// interval, concavity makes it unimodal.
void line_search(const Problem& pb, std::vector<double>& v, int i, int j, int k) {
  const double di = pb.w(j) - pb.w(k);
  const double dj = pb.w(k) - pb.w(i);
  const double dk = pb.w(i) - pb.w(j);
  const int idx[3] = {i, j, k};
  const double dir[3] = {di, dj, dk};
  double lo = -1e300, hi = 1e300;
  for (int m = 0; m < 3; ++m) {
    if (dir[m] == 0.0) continue;
    const double a = (-1.0 - v[idx[m]]) / dir[m];
    const double b = (1.0 - v[idx[m]]) / dir[m];
    lo = std::fmax(lo, std::fmin(a, b));
    hi = std::fmin(hi, std::fmax(a, b));
  }
  if (!(hi > lo)) return;
  auto slice = [&](double th) {
    double s = 0.0;
    for (int m = 0; m < 3; ++m) {
      const double u = v[idx[m]] + th * dir[m];
      s += std::sqrt(std::fmax(0.0, (1.0 - u) * (1.0 + u)));
    }
    return s;
  };
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = slice(x1), f2 = slice(x2);
  for (int it = 0; it < 70 && (b - a) > 1e-14 * (1.0 + std::fabs(a)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = slice(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = slice(x1);
    }
  }
  const double th = (a + b) / 2.0;
  for (int m = 0; m < 3; ++m)
    v[idx[m]] = std::clamp(v[idx[m]] + th * dir[m], -1.0, 1.0);
}

// Seed schedule read off the known optimal curve: v_j is the secant
// slope of y(x) over the j-th x-interval.
std::vector<double> synthesis_seed(const Point& q, const Problem& pb,
                                   CausalMembership mem) {
  std::vector<double> v(pb.n, 0.0);
  auto fill_from = [&](auto&& y_of_x) {
    for (int j = 0; j < pb.n; ++j) {
      const double vj =
          (y_of_x((j + 1) * pb.dt) - y_of_x(j * pb.dt)) / pb.dt;
      v[j] = std::clamp(vj, -1.0, 1.0);
    }
  };
  if (mem == CausalMembership::Interior) {
    const ExpCoords lc = exp_inverse(q);
    if (lc.c == 0.0) {
      const double slope = std::tanh(lc.psi);
      fill_from([&](double x) { return slope * x; });
    } else {
      const double sh = std::sinh(lc.psi);
      const double ch = std::cosh(lc.psi);
      fill_from([&](double x) {
        const double s = lc.c * x + sh;
        return (std::sqrt(1.0 + s * s) - ch) / lc.c;
      });
    }
  } else if (q.z > 0.0) {
    const double tau1 = (q.x - q.y) / 2.0;  // minus edge first
    fill_from([&](double x) { return x <= tau1 ? -x : x - 2.0 * tau1; });
  } else if (q.z < 0.0) {
    const double tau1 = (q.x + q.y) / 2.0;  // plus edge first
    fill_from([&](double x) { return x <= tau1 ? x : 2.0 * tau1 - x; });
  } else {
    const double slope = q.y >= 0.0 ? 1.0 : -1.0;
    fill_from([&](double x) { return slope * x; });
  }
  return v;
}

}  // namespace

BruteForceResult brute_force_distance(const Point& q, const BruteForceOptions& opts) {
  const CausalMembership mem = membership(q);
  if (mem == CausalMembership::Outside)
    throw UnreachableError("brute_force_distance: target is not in the causal future");
  if (mem == CausalMembership::Origin) return {};
  if (opts.pieces < 1)
    throw BadGridError("brute_force_distance: need at least one piece");

  Problem pb;
  pb.n = opts.pieces;
  pb.dt = q.x / pb.n;
  pb.A = q.y / pb.dt;
  pb.B = 2.0 * q.z / (pb.dt * pb.dt);
  pb.Sw2 = double(pb.n) * (double(pb.n) * pb.n - 1.0) / 3.0;

  const double feas_tol = opts.tol * std::fmax(1.0, std::hypot(q.y, q.z));
  std::mt19937_64 rng(opts.rng_seed);
  std::uniform_real_distribution<double> box(-0.95, 0.95);
  std::uniform_int_distribution<int> pick(0, pb.n - 1);

  std::vector<std::vector<double>> starts;
  starts.push_back(synthesis_seed(q, pb, mem));
  if (static_cast<int>(opts.seed_u2.size()) == pb.n) starts.push_back(opts.seed_u2);
  while (static_cast<int>(starts.size()) < std::max(1, opts.restarts)) {
    std::vector<double> v(pb.n);
    for (double& vj : v) vj = box(rng);
    starts.push_back(std::move(v));
  }

  BruteForceResult best;
  best.length = -1.0;
  for (auto& v : starts) {
    pb.make_feasible(v);
    if (pb.residual(v) > feas_tol) continue;
    double len = pb.length(v);
    // Below three pieces the two endpoint constraints pin the schedule;
    // there is nothing to search over.
    const int sweeps = pb.n < 3 ? 0 : opts.sweeps;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
      for (int m = 0; m < 2 * pb.n; ++m) {
        int i = pick(rng), j = pick(rng), k = pick(rng);
        if (i == j || j == k || i == k) continue;
        line_search(pb, v, i, j, k);
      }
      pb.project(v);
      for (double& vj : v) vj = std::clamp(vj, -1.0, 1.0);
      const double len2 = pb.length(v);
      if (len2 < len + 1e-14 * (1.0 + len)) {
        len = std::fmax(len, len2);
        break;
      }
      len = len2;
    }
    if (pb.residual(v) > feas_tol) continue;
    if (len > best.length) {
      best.length = len;
      best.dt = pb.dt;
      best.u2 = v;
      best.endpoint_error = pb.residual(v);
    }
  }
  if (best.length < 0.0)
    throw NoFeasibleScheduleError(
        "brute_force_distance: no schedule met the endpoint tolerance");
  return best;
}

double brute_force_distance(const Point& q, int pieces, int iters, double tol) {
  BruteForceOptions opts;
  opts.pieces = pieces;
  opts.sweeps = iters;
  opts.tol = tol;
  return brute_force_distance(q, opts).length;
}

}  // namespace heis
