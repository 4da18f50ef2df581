#pragma once

// Scalar kernels shared by the exponential map, the distance and the
// sphere profile.  Everything is templated on the real type so the same
// code path serves the production double build and extended-precision
// cross-checks; accuracy thresholds scale with the type's epsilon.

#include <array>
#include <cmath>
#include <limits>
#include <type_traits>

#include "heis/types.hpp"

namespace heis::scalar {

template <class T>
int sgn(const T& v) {
  return (v > T(0)) - (v < T(0));
}

// sinh(u) - u without cancellation.  The direct difference loses about
// 3*|log10 u| digits for small u; the series is summed to the type's
// epsilon for |u| < 1.
template <class T>
T sinh_minus_arg(T u) {
  using std::fabs;
  using std::sinh;
  const T eps = std::numeric_limits<T>::epsilon();
  if (fabs(u) >= T(1)) return sinh(u) - u;
  const T u2 = u * u;
  T term = u * u2 / T(6);
  T sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= u2 / T((2 * k + 2) * (2 * k + 3));
    sum += term;
    if (fabs(term) <= eps * fabs(sum)) break;
  }
  return sum;
}

// cosh(u) - 1 = 2 sinh^2(u/2), exact in the relative sense.
template <class T>
T cosh_minus_one(T u) {
  using std::sinh;
  const T s = sinh(u / T(2));
  return T(2) * s * s;
}

// sinh(u)/u with the limit value 1 at u = 0.
template <class T>
T sinhc(T u) {
  using std::sinh;
  if (u == T(0)) return T(1);
  return sinh(u) / u;
}

// u/sinh(u) with the limit value 1 at u = 0.
template <class T>
T inv_sinhc(T u) {
  return T(1) / sinhc(u);
}

// artanh(y/x) evaluated as (1/2) log((x+y)/(x-y)); requires x > |y|.
template <class T>
T artanh_ratio(T x, T y) {
  using std::log;
  return log((x + y) / (x - y)) / T(2);
}

// alpha(p) = (sinh 2p - 2p) / (8 sinh^2 p), the odd increasing
// diffeomorphism of R onto (-1/4, 1/4) controlling the inverse of the
// exponential map.
template <class T>
T alpha_fn(T p) {
  using std::exp;
  using std::fabs;
  using std::log;
  if (p == T(0)) return T(0);
  const T ap = fabs(p);
  // Past this point sinh^2 p would overflow; the tail is
  // 1/4 - (p - 1/2) e^{-2p} up to terms of order p e^{-4p}.
  const T overflow_guard = T(0.2) * log(std::numeric_limits<T>::max());
  if (ap > overflow_guard) {
    const T tail = T(0.25) - (ap - T(0.5)) * exp(T(-2) * ap);
    return p > T(0) ? tail : -tail;
  }
  return sinh_minus_arg(T(2) * p) / (T(4) * cosh_minus_one(T(2) * p));
}

// d alpha / dp = (p sinh 2p - (cosh 2p - 1)) / (cosh 2p - 1)^2.
template <class T>
T alpha_deriv(T p) {
  using std::exp;
  using std::fabs;
  using std::log;
  using std::sinh;
  const T ap = fabs(p);
  if (ap < T(0.5)) {
    const T p2 = p * p;
    return T(1) / T(6) - p2 / T(15) + p2 * p2 / T(63);
  }
  const T overflow_guard = T(0.2) * log(std::numeric_limits<T>::max());
  if (ap > overflow_guard) return (T(2) * ap - T(2)) * exp(T(-2) * ap);
  const T cm = cosh_minus_one(T(2) * p);
  return (p * sinh(T(2) * p) - cm) / (cm * cm);
}

// beta = alpha^{-1} on (-1/4, 1/4).  Safeguarded Newton inside a
// doubling bracket; the bracket expansion makes no assumption about the
// decay rate of 1/4 - alpha(p).  Residual tolerance is the double-path
// contract |alpha(p) - w| < 1e-14 + 1e-12 |w| rescaled by epsilon.
template <class T>
T beta_fn(T w) {
  using std::fabs;
  using std::log;
  const T eps = std::numeric_limits<T>::epsilon();
  if (fabs(w) >= T(0.25))
    throw OutOfDomainError("beta: argument magnitude must be < 1/4");
  if (w == T(0)) return T(0);
  const int sign = sgn(w);
  const T aw = fabs(w);

  const T tol = T(45) * eps + T(4545) * eps * aw;

  // Bracket [lo, hi] with alpha(lo) <= aw <= alpha(hi).
  T lo = T(0), hi = T(1);
  while (alpha_fn(hi) < aw) {
    lo = hi;
    hi *= T(2);
  }

  // Initial guess: 6w from the series near 0; for w close to 1/4 invert
  // the exponential tail (p - 1/2) e^{-2p} = 1/4 - w instead.
  T p = T(6) * aw;
  if (aw > T(0.24)) {
    const T delta = T(0.25) - aw;
    T g = -log(delta) / T(2);
    if (g > T(1)) g = (-log(delta) + log(g - T(0.5))) / T(2);
    p = g;
  }
  if (p < lo || p > hi) p = (lo + hi) / T(2);

  const int max_iter = 8 * std::numeric_limits<T>::max_digits10 + 60;
  for (int i = 0; i < max_iter; ++i) {
    const T f = alpha_fn(p) - aw;
    if (fabs(f) <= tol) break;
    if (f > T(0))
      hi = p;
    else
      lo = p;
    const T d = alpha_deriv(p);
    T next = (d > T(0)) ? p - f / d : p;
    if (!(next > lo && next < hi)) next = (lo + hi) / T(2);
    if (next == p) break;
    p = next;
    if (hi - lo <= eps * (T(1) + fabs(p))) break;
  }
  return sign > 0 ? p : -p;
}

// Exponential map: (psi, c, t) -> (x, y, z).  The c != 0 branch is
// arranged so that only sinh(ct) - ct needs a series; x and y are
// cancellation-free for every ct, which keeps the map continuous
// through c -> 0 to machine precision.
template <class T>
std::array<T, 3> exp_map_raw(T psi, T c, T t) {
  using std::cosh;
  using std::sinh;
  if (!(t > T(0))) throw NonpositiveTimeError("exp_map: time must be > 0");
  const T sp = sinh(psi);
  const T cp = cosh(psi);
  if (c == T(0)) return {t * cp, t * sp, T(0)};
  const T u = c * t;
  const T cm_over_u = cosh_minus_one(u) / u;  // (cosh u - 1)/u
  const T sc = sinhc(u);                      // sinh(u)/u
  const T x = t * (sp * cm_over_u + cp * sc);
  const T y = t * (cp * cm_over_u + sp * sc);
  const T z = sinh_minus_arg(u) / (T(2) * c * c);
  return {x, y, z};
}

// Inverse of the exponential map on the chronological future
// {x > |y|, x^2 - y^2 > 4|z|}.  Membership is the caller's contract.
template <class T>
std::array<T, 3> exp_inverse_raw(T x, T y, T z) {
  using std::fabs;
  using std::sqrt;
  const T eps = std::numeric_limits<T>::epsilon();
  const T xy2 = (x - y) * (x + y);  // x^2 - y^2 without squaring loss
  const T tau = artanh_ratio(x, y);
  const T w = z / xy2;
  // The c != 0 formulas degrade as 0/0 for tiny |w|; the z = 0 branch
  // is exact in that limit.
  if (z == T(0) || fabs(w) < T(4500) * eps) return {tau, T(0), sqrt(xy2)};
  const T p = beta_fn(w);
  const T c = T(sgn(z)) * sqrt(sinh_minus_arg(T(2) * p) / (T(2) * z));
  const T t = T(2) * p / c;
  return {tau - p, c, t};
}

template <class T>
struct DistEval {
  T value{};
  T p{};
  bool clamped = false;
};

// d(q) = sqrt(x^2 - y^2) * p/sinh p on the interior.  When roundoff in
// x^2 - y^2 pushes w = z/(x^2-y^2) across 1/4 for a point the caller
// knows is interior, w is clamped back into beta's domain and the
// result flagged as reduced precision.
template <class T>
DistEval<T> dist_raw(T x, T y, T z) {
  using std::fabs;
  using std::sqrt;
  const T eps = std::numeric_limits<T>::epsilon();
  const T xy2 = (x - y) * (x + y);
  T w = z / xy2;
  DistEval<T> out;
  const T limit = T(0.25) - T(450) * eps;
  if (fabs(w) > limit) {
    w = T(sgn(w)) * limit;
    out.clamped = true;
  }
  out.p = beta_fn(w);
  out.value = sqrt(xy2) * inv_sinhc(out.p);
  return out;
}

// a(c) = (sinh c - c)/(2c^2), the odd increasing diffeomorphism of R
// whose inverse b parametrizes the unit-sphere profile.
template <class T>
T a_fn(T c) {
  if (c == T(0)) return T(0);
  return sinh_minus_arg(c) / (T(2) * c * c);
}

template <class T>
T a_deriv(T c) {
  using std::fabs;
  const T ac = fabs(c);
  if (ac < T(0.5)) {
    const T c2 = c * c;
    return T(1) / T(12) + c2 / T(80) + c2 * c2 / T(2016);
  }
  return (cosh_minus_one(c) * c - T(2) * sinh_minus_arg(c)) /
         (T(2) * c * c * c);
}

// b = a^{-1}; same hybrid solver as beta with initial guess 12z.
template <class T>
T b_fn(T z) {
  using std::fabs;
  const T eps = std::numeric_limits<T>::epsilon();
  if (z == T(0)) return T(0);
  const int sign = sgn(z);
  const T az = fabs(z);
  const T tol = T(45) * eps + T(4545) * eps * az;

  T lo = T(0), hi = T(1);
  while (a_fn(hi) < az) {
    lo = hi;
    hi *= T(2);
  }
  T c = T(12) * az;
  if (c < lo || c > hi) c = (lo + hi) / T(2);

  const int max_iter = 8 * std::numeric_limits<T>::max_digits10 + 60;
  for (int i = 0; i < max_iter; ++i) {
    const T f = a_fn(c) - az;
    if (fabs(f) <= tol) break;
    if (f > T(0))
      hi = c;
    else
      lo = c;
    const T d = a_deriv(c);
    T next = (d > T(0)) ? c - f / d : c;
    if (!(next > lo && next < hi)) next = (lo + hi) / T(2);
    if (next == c) break;
    c = next;
    if (hi - lo <= eps * (T(1) + fabs(c))) break;
  }
  return sign > 0 ? c : -c;
}

// e(w) = sinh^2(w)/w^2 with e(0) = 1; sinh(w)/w is already
// cancellation-free so no series split is needed.
template <class T>
T e_fn(T w) {
  const T s = sinhc(w);
  return s * s;
}

template <class T>
T k_fn(T z) {
  return b_fn(z) / T(2);
}

// Unit-sphere profile f = e o k; even, f(0) = 1.
template <class T>
T f_fn(T z) {
  using std::fabs;
  if (z == T(0)) return T(1);
  return e_fn(k_fn(fabs(z)));
}

}  // namespace heis::scalar
