#pragma once

#include <cmath>
#include <sstream>
#include <utility>

#include "refcurve/errors.hpp"

namespace refcurve::roots {

struct Bracket {
  double lo;
  double hi;
};

/// Smallest x in (lo, hi] with pred(x) true, for a monotone predicate that is
/// false at lo and true at hi. Bisects until hi - lo <= x_tol.
template <typename Pred>
double bisect_threshold(Pred&& pred, Bracket b, double x_tol) {
  while (b.hi - b.lo > x_tol) {
    const double mid = 0.5 * (b.lo + b.hi);
    if (!(mid > b.lo && mid < b.hi)) break;
    if (pred(mid)) {
      b.hi = mid;
    } else {
      b.lo = mid;
    }
  }
  return b.hi;
}

/// Expands [start, 2 start, 4 start, ...] until pred turns true.
///
/// Returns the last false point and the first true point. Throws
/// NumericalError when no true point is found up to `limit`.
template <typename Pred>
Bracket bracket_by_doubling(Pred&& pred, double start, double limit) {
  double lo = 0.0;
  double x = start;
  while (x <= limit) {
    if (pred(x)) return {lo, x};
    lo = x;
    x *= 2.0;
  }
  if (pred(limit)) return {lo, limit};
  std::ostringstream msg;
  msg << "design infeasible: no solution below " << limit;
  throw NumericalError(msg.str());
}

/// Sign-change root of a continuous function on a bracket.
template <typename F>
double bisect_root(F&& f, Bracket b, double x_tol) {
  double f_lo = f(b.lo);
  const double f_hi = f(b.hi);
  if (f_lo == 0.0) return b.lo;
  if (f_hi == 0.0) return b.hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw NumericalError("bisect_root: interval does not bracket a root");
  }
  while (b.hi - b.lo > x_tol) {
    const double mid = 0.5 * (b.lo + b.hi);
    if (!(mid > b.lo && mid < b.hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(f_lo)) {
      b.lo = mid;
      f_lo = fm;
    } else {
      b.hi = mid;
    }
  }
  return 0.5 * (b.lo + b.hi);
}

}  // namespace refcurve::roots
