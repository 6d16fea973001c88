#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <sstream>
#include <vector>

#include "refcurve/errors.hpp"

namespace refcurve::quad {

struct Tolerance {
  double absolute = 1e-9;
  double relative = 0.0;
  std::size_t max_intervals = 2000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes on [-1, 1] (QUADPACK qk15).
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename F>
Segment gauss_kronrod(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kronrod_weights[7];
  double gauss = fc * gauss_weights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kronrod_nodes[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kronrod_weights[j] * sum;
    if (j % 2 == 1) gauss += gauss_weights[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod quadrature of f over [lo, hi].
///
/// The interval with the largest error estimate is bisected until the summed
/// error estimate falls below max(absolute, relative * |value|). Throws
/// NumericalError (with the achieved error) when the interval budget runs out.
template <typename F>
Result integrate(F&& f, double lo, double hi, const Tolerance& tol = {}) {
  if (lo == hi) return {};
  if (hi < lo) {
    auto r = integrate(f, hi, lo, tol);
    r.value = -r.value;
    return r;
  }
  std::priority_queue<detail::Segment> heap;
  auto first = detail::gauss_kronrod(f, lo, hi);
  double total = first.value;
  double error = first.error;
  std::size_t evals = 15;
  heap.push(first);

  auto target = [&] { return std::max(tol.absolute, tol.relative * std::fabs(total)); };
  while (error > target()) {
    if (heap.size() >= tol.max_intervals) {
      std::ostringstream msg;
      msg << "quadrature did not converge on [" << lo << ", " << hi
          << "]: achieved error " << error << ", requested " << target();
      throw NumericalError(msg.str());
    }
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Interval cannot be split further in double precision.
      std::ostringstream msg;
      msg << "quadrature interval exhausted near " << worst.lo
          << ": achieved error " << error;
      throw NumericalError(msg.str());
    }
    auto left = detail::gauss_kronrod(f, worst.lo, mid);
    auto right = detail::gauss_kronrod(f, mid, worst.hi);
    evals += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed accumulated rounding from the running updates.
  double sum = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, evals};
}

/// Integrates over consecutive pieces [b_0, b_1], [b_1, b_2], ... so that
/// known kinks of the integrand fall on piece boundaries.
template <typename F>
Result integrate_pieces(F&& f, const std::vector<double>& breaks,
                        const Tolerance& tol = {}) {
  Result out;
  if (breaks.size() < 2) return out;
  Tolerance piece = tol;
  piece.absolute = tol.absolute / static_cast<double>(breaks.size() - 1);
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (!(breaks[k + 1] > breaks[k])) continue;
    auto r = integrate(f, breaks[k], breaks[k + 1], piece);
    out.value += r.value;
    out.error += r.error;
    out.evaluations += r.evaluations;
  }
  return out;
}

/// Integral over [lo, hi) for an integrand with integrable endpoint
/// behaviour at hi.
///
/// The range is cut into [lo, hi - h], [hi - h, hi - h/2], ... and pieces are
/// accumulated toward hi until a piece contributes less than the tolerance.
template <typename F>
Result integrate_toward_endpoint(F&& f, double lo, double hi,
                                 const Tolerance& tol = {}) {
  Result out;
  if (!(hi > lo)) return out;
  Tolerance piece = tol;
  piece.absolute = 0.1 * tol.absolute;
  double h = 0.5 * (hi - lo);
  double left = lo;
  for (int k = 0; k < 1000; ++k) {
    const double right = hi - h;
    if (!(right > left && right < hi)) break;
    auto r = integrate(f, left, right, piece);
    out.value += r.value;
    out.error += r.error;
    out.evaluations += r.evaluations;
    if (k > 0 && std::fabs(r.value) < tol.absolute) break;
    left = right;
    h *= 0.5;
  }
  return out;
}

}  // namespace refcurve::quad
