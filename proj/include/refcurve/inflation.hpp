#pragma once

// Expected variances of the classical and the variability-adjusted
// one-sample log-rank statistics when the reference curve is estimated from a
// historical cohort, and the resulting actual level of the classical test.
//
// Under H0 the experimental survival is replaced by the historical
// Kaplan-Meier curve; censoring in the planned trial is U(f, a + f). Every
// integral is a step function against a polynomial, done in closed form.

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "refcurve/errors.hpp"
#include "refcurve/normal.hpp"
#include "refcurve/step_function.hpp"
#include "refcurve/survival_core.hpp"

namespace refcurve {

struct InflationInput {
  Cohort historical;
  double accrual_a = 2.0;
  double followup_f = 2.0;
  double pi = 1.0;
  double alpha = 0.05;

  void validate() const {
    if (!(accrual_a > 0.0) || !std::isfinite(accrual_a)) {
      throw std::invalid_argument("inflation: accrual must be positive");
    }
    if (!(followup_f >= 0.0) || !std::isfinite(followup_f)) {
      throw std::invalid_argument("inflation: follow-up must be nonnegative");
    }
    if (!(pi > 0.0) || !std::isfinite(pi)) {
      throw std::invalid_argument("inflation: pi must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw std::invalid_argument("inflation: alpha must lie in (0, 1)");
    }
    historical.require_nonempty();
    if (historical.event_count() == 0) {
      throw DegenerateDataError("inflation: historical cohort has no events");
    }
  }
};

namespace detail {

// Pieces [lo, hi) of (0, inf) on which both step functions are constant.
template <typename Visit>
void for_each_piece(const StepFunction& s, const StepFunction& v, double lo,
                    double hi, Visit&& visit) {
  const auto grid = union_grid(s, v);
  double left = lo;
  auto it = std::upper_bound(grid.begin(), grid.end(), lo);
  for (; left < hi; ++it) {
    const double right = (it == grid.end()) ? hi : std::min(*it, hi);
    if (right > left) visit(left, right, s(left), v(left));
    left = right;
  }
}

}  // namespace detail

/// (1/a) int_f^{a+f} F_T(u) du with F_T = 1 - KM(historical).
inline double expected_var_oslr(const InflationInput& in) {
  in.validate();
  const auto km = kaplan_meier(in.historical, KmTarget::event);
  const double a = in.accrual_a;
  const double f = in.followup_f;
  double acc = 0.0;
  detail::for_each_piece(km, km, f, a + f,
                         [&](double l, double r, double s, double) {
                           acc += (1.0 - s) * (r - l);
                         });
  return acc / a;
}

/// Correction term int sigma_A S_T^2 S_C dF_C + int sigma_A S_T S_C^2 dF_T,
/// without the 2 pi factor.
inline double expected_pair_term(const InflationInput& in) {
  in.validate();
  const auto km = kaplan_meier(in.historical, KmTarget::event);
  const auto sigma = na_variance(in.historical);
  const double a = in.accrual_a;
  const double f = in.followup_f;
  const double end = a + f;

  // int_l^r (end - u) / a^2 du on each piece of [f, end].
  double against_censoring = 0.0;
  detail::for_each_piece(
      km, sigma, f, end, [&](double l, double r, double s, double v) {
        const double w = ((end - l) * (end - l) - (end - r) * (end - r)) /
                         (2.0 * a * a);
        against_censoring += v * s * s * w;
      });

  double against_events = 0.0;
  for (double t : km.jump_times()) {
    if (t > end) break;
    const double mass = km.left_limit(t) - km(t);
    const double sc = (t <= f) ? 1.0 : (end - t) / a;
    against_events += sigma(t) * km(t) * sc * sc * mass;
  }
  return against_censoring + against_events;
}

inline double expected_var_new(const InflationInput& in) {
  return expected_var_oslr(in) + 2.0 * in.pi * expected_pair_term(in);
}

/// 2 Phi(sqrt(E[oslr] / E[new]) Phi^{-1}(alpha / 2)).
inline double inflated_level(const InflationInput& in) {
  const double v_oslr = expected_var_oslr(in);
  const double v_new = v_oslr + 2.0 * in.pi * expected_pair_term(in);
  if (!(v_new > 0.0)) {
    throw DegenerateDataError(
        "inflation: no historical events inside the planned follow-up window");
  }
  return 2.0 * normal_cdf(std::sqrt(v_oslr / v_new) *
                          normal_quantile(in.alpha / 2.0));
}

enum class SweepAxis { pi, followup, accrual };

struct SweepRow {
  double value = 0.0;
  double level = 0.0;
  double var_oslr = 0.0;
  double var_new = 0.0;
  bool valid = false;
  std::string error;
};

/// inflated_level along one axis; rows that fail carry the message and
/// valid = false.
inline std::vector<SweepRow> sweep(const InflationInput& base, SweepAxis axis,
                                   const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("sweep: grid must be sorted");
  }
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  InflationInput in = base;
  for (double x : grid) {
    SweepRow row;
    row.value = x;
    switch (axis) {
      case SweepAxis::pi: in.pi = x; break;
      case SweepAxis::followup: in.followup_f = x; break;
      case SweepAxis::accrual: in.accrual_a = x; break;
    }
    try {
      row.var_oslr = expected_var_oslr(in);
      row.var_new = row.var_oslr + 2.0 * in.pi * expected_pair_term(in);
      row.level = inflated_level(in);
      row.valid = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace refcurve
