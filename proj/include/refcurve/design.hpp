#pragma once

// Analytic power and sample size for the variability-adjusted one-sample
// log-rank test under a proportional-hazards planning alternative
// Lambda_B = omega0 * Lambda_A, and Schoenfeld sizing for the two-sample
// log-rank comparator.
//
// Planning model: uniform accrual over [0, a] at rate r, follow-up f, no loss
// to follow-up, so censoring C ~ U(f, a + f) in both arms; control times are
// Weibull with cumulative hazard -log(S1) t^kappa.

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "refcurve/errors.hpp"
#include "refcurve/normal.hpp"
#include "refcurve/quadrature.hpp"
#include "refcurve/root_finding.hpp"

namespace refcurve {

/// Weibull survival law with cumulative hazard omega * (-log S1) * t^kappa.
class WeibullModel {
 public:
  WeibullModel(double s1, double kappa, double omega = 1.0)
      : s1_(s1), kappa_(kappa), omega_(omega) {
    if (!(s1 > 0.0 && s1 < 1.0)) {
      throw std::invalid_argument("Weibull: s1 must lie in (0, 1)");
    }
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
      throw std::invalid_argument("Weibull: kappa must be positive");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
      throw std::invalid_argument("Weibull: hazard ratio must be positive");
    }
    rate_ = -std::log(s1) * omega;
  }

  double cum_hazard(double t) const {
    return t <= 0.0 ? 0.0 : rate_ * std::pow(t, kappa_);
  }
  double hazard(double t) const {
    if (t <= 0.0) {
      if (kappa_ < 1.0) return std::numeric_limits<double>::infinity();
      return kappa_ == 1.0 ? rate_ : 0.0;
    }
    return rate_ * kappa_ * std::pow(t, kappa_ - 1.0);
  }
  double survival(double t) const { return std::exp(-cum_hazard(t)); }
  double cdf(double t) const { return -std::expm1(-cum_hazard(t)); }
  double density(double t) const { return hazard(t) * survival(t); }

  /// Inverse-transform draw from U ~ U(0, 1].
  double sample(double u) const {
    return std::pow(-std::log(u) / rate_, 1.0 / kappa_);
  }

  /// Same shape and scale with cumulative hazard multiplied by `ratio`.
  WeibullModel scaled(double ratio) const {
    return WeibullModel(s1_, kappa_, omega_ * ratio);
  }

  double s1() const { return s1_; }
  double kappa() const { return kappa_; }
  double omega() const { return omega_; }

 private:
  double s1_;
  double kappa_;
  double omega_;
  double rate_;
};

inline WeibullModel weibull_cum_hazard(double s1, double kappa) {
  return WeibullModel(s1, kappa);
}

/// C ~ U(f, a + f).
struct UniformCensoring {
  double accrual;
  double followup;

  double end() const { return accrual + followup; }
  double density(double s) const {
    return (s >= followup && s <= end()) ? 1.0 / accrual : 0.0;
  }
  double survival(double s) const {
    if (s > end()) return 0.0;
    return std::min(1.0, (end() - s) / accrual);
  }
};

struct TrialDesign {
  double accrual_a = 1.0;
  double followup_f = 3.0;
  double rate_r = 100.0;
  double pi = 1.0;
  double alpha = 0.05;
  double omega0 = 0.5;
  double kappa = 1.0;
  double s1 = 0.5;

  double n() const { return rate_r * accrual_a; }

  /// Checks everything except the accrual length, which the sizing routines
  /// solve for.
  void validate_planning() const {
    if (!(followup_f >= 0.0) || !std::isfinite(followup_f)) {
      throw std::invalid_argument("design: follow-up must be nonnegative");
    }
    if (!(rate_r > 0.0)) throw std::invalid_argument("design: rate must be positive");
    if (!(pi > 0.0)) throw std::invalid_argument("design: pi must be positive");
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw std::invalid_argument("design: alpha must lie in (0, 1)");
    }
    if (!(omega0 > 0.0 && omega0 <= 1.0)) {
      throw std::invalid_argument("design: omega0 must lie in (0, 1]");
    }
    WeibullModel(s1, kappa);  // validates s1, kappa
  }
  void validate() const {
    validate_planning();
    if (!(accrual_a > 0.0) || !std::isfinite(accrual_a)) {
      throw std::invalid_argument("design: accrual must be positive");
    }
  }
};

struct DesignResult {
  double accrual_a = 0.0;
  int n_total = 0;
  int n_control = 0;
  int n_experimental = 0;
  double achieved_power = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
  double required_events = 0.0;  // Schoenfeld sizing only
};

struct MuSigma {
  double mu = 0.0;
  double sigma = 0.0;
  double event_fraction = 0.0;  // int F_T f_C, expected events per patient
};

namespace detail {

inline constexpr double kQuadTol = 1e-9;

// sigma_A(s) = int_0^s lambda_A / (S_T S_C) du for s < a + f.
//
// On [0, f] the censoring factor is 1 and the integral is exp(Lambda) - 1.
// Beyond f it is evaluated by quadrature, chained from the nearest
// previously evaluated node below s.
class LimitVarianceFunction {
 public:
  LimitVarianceFunction(const WeibullModel& model, UniformCensoring censor)
      : model_(model), censor_(censor) {
    cache_.emplace(censor_.followup,
                   std::expm1(model_.cum_hazard(censor_.followup)));
  }

  double operator()(double s) {
    if (s <= censor_.followup) return std::expm1(model_.cum_hazard(s));
    if (s >= censor_.end()) return std::numeric_limits<double>::infinity();
    auto it = cache_.upper_bound(s);
    --it;  // key f is always present and <= s
    if (it->first == s) return it->second;
    const double a = censor_.accrual;
    const double end = censor_.end();
    auto integrand = [&](double u) {
      return model_.hazard(u) * std::exp(model_.cum_hazard(u)) * a /
             (end - u);
    };
    quad::Tolerance tol{1e-15, 1e-13, 4000};
    const double v = it->second + quad::integrate(integrand, it->first, s, tol).value;
    cache_.emplace_hint(std::next(it), s, v);
    return v;
  }

 private:
  WeibullModel model_;
  UniformCensoring censor_;
  std::map<double, double> cache_;
};

// Shared pieces of the planning-model integrals.
class PlanningIntegrals {
 public:
  explicit PlanningIntegrals(const TrialDesign& d)
      : model_(d.s1, d.kappa),
        censor_{d.accrual_a, d.followup_f},
        sigma_a_(model_, censor_) {}

  const WeibullModel& model() const { return model_; }
  const UniformCensoring& censoring() const { return censor_; }

  double survival_x(double u) const {
    return model_.survival(u) * censor_.survival(u);
  }
  double density_x(double u) const {
    return model_.density(u) * censor_.survival(u) +
           model_.survival(u) * censor_.density(u);
  }

  /// int_0^upper F_T(u) f_C(u) du.
  double events_until(double upper) const {
    const double lo = censor_.followup;
    const double hi = std::min(upper, censor_.end());
    if (!(hi > lo)) return 0.0;
    auto f = [&](double u) { return model_.cdf(u) / censor_.accrual; };
    return quad::integrate(f, lo, hi, {kQuadTol * 0.1, 0.0, 2000}).value;
  }

  /// int_0^upper sigma_A(u) f_X(u) S_X(u) du, upper <= a + f.
  double variance_term_until(double upper) {
    const double f = censor_.followup;
    const double end = censor_.end();
    auto g = [&](double u) { return pair_density(u); };
    double total = 0.0;
    // [0, min(f, upper)]: substitute u = b w^{1/kappa} so that the
    // u^{2 kappa - 1} behaviour at the origin becomes polynomial in w.
    const double b = std::min(f, upper);
    if (b > 0.0) {
      const double p = model_.kappa() < 1.0 ? 1.0 / model_.kappa() : 1.0;
      auto gw = [&](double w) {
        const double u = b * std::pow(w, p);
        return g(u) * b * p * std::pow(w, p - 1.0);
      };
      total += quad::integrate(gw, 0.0, 1.0, {kQuadTol * 0.1, 0.0, 2000}).value;
    }
    if (upper > f) {
      const quad::Tolerance tol{kQuadTol * 0.1, 0.0, 2000};
      if (upper >= end) {
        total += quad::integrate_toward_endpoint(g, f, end, tol).value;
      } else {
        total += quad::integrate(g, f, upper, tol).value;
      }
    }
    return total;
  }

  double sigma_a(double s) { return sigma_a_(s); }

  /// sigma_A(u) f_X(u) S_X(u). Behaves like exp(-Lambda(u)); cut to 0 once
  /// exp(Lambda) would overflow.
  double pair_density(double u) {
    if (model_.cum_hazard(u) > kOverflowHazard) return 0.0;
    return sigma_a_(u) * density_x(u) * survival_x(u);
  }

  /// sigma_A(s) S_X(s)^2, with the same cut-off.
  double pair_mass(double s) {
    if (model_.cum_hazard(s) > kOverflowHazard) return 0.0;
    const double sx = survival_x(s);
    return sigma_a_(s) * sx * sx;
  }

  static constexpr double kOverflowHazard = 600.0;

 private:
  WeibullModel model_;
  UniformCensoring censor_;
  LimitVarianceFunction sigma_a_;
};

}  // namespace detail

/// Asymptotic drift factor mu and standard deviation sigma of the new
/// statistic under the planning model:
///   mu      = sqrt(n) sqrt(pi / (1 + pi)) int F_T f_C,
///   sigma^2 = int F_T f_C + 2 pi int sigma_A f_X S_X.
inline MuSigma mu_sigma(const TrialDesign& design) {
  design.validate();
  detail::PlanningIntegrals pi_int(design);
  const double end = design.accrual_a + design.followup_f;
  const double events = pi_int.events_until(end);
  const double var_term = pi_int.variance_term_until(end);
  MuSigma out;
  out.event_fraction = events;
  out.mu = std::sqrt(design.n()) * std::sqrt(design.pi / (1.0 + design.pi)) *
           events;
  out.sigma = std::sqrt(events + 2.0 * design.pi * var_term);
  return out;
}

namespace detail {

inline double power_from(const TrialDesign& d, const MuSigma& ms) {
  if (!(ms.sigma > 0.0)) return d.alpha / 2.0;
  return normal_cdf(normal_quantile(d.alpha / 2.0) -
                    std::log(d.omega0) * ms.mu / ms.sigma);
}

inline void check_sizing(const TrialDesign& d, double target_power) {
  if (!(d.omega0 < 1.0)) {
    throw std::invalid_argument("sizing requires omega0 < 1");
  }
  if (!(target_power > d.alpha / 2.0 && target_power < 1.0)) {
    throw std::invalid_argument("target power must lie in (alpha/2, 1)");
  }
}

inline int split_control(int n_total, double pi) {
  return static_cast<int>(std::lround(n_total / (1.0 + pi)));
}

}  // namespace detail

/// Power 1 - beta = Phi(Phi^{-1}(alpha/2) - log(omega0) mu / sigma).
inline double power(const TrialDesign& design) {
  return detail::power_from(design, mu_sigma(design));
}

struct SizingOptions {
  double a_start = 0.01;
  double a_max = 100.0;
  double a_tol = 1e-8;
};

/// Smallest accrual length whose power reaches `target_power`; the accrual
/// field of `planning` is ignored. n = ceil(r a).
inline DesignResult required_accrual(const TrialDesign& planning,
                                     double target_power,
                                     const SizingOptions& opt = {}) {
  planning.validate_planning();
  detail::check_sizing(planning, target_power);
  auto reaches = [&](double a) {
    TrialDesign d = planning;
    d.accrual_a = a;
    return power(d) >= target_power;
  };
  const auto bracket = roots::bracket_by_doubling(reaches, opt.a_start, opt.a_max);
  const double a = roots::bisect_threshold(reaches, bracket, opt.a_tol);

  DesignResult r;
  r.accrual_a = a;
  r.n_total = static_cast<int>(std::ceil(planning.rate_r * a - 1e-6));
  r.n_control = detail::split_control(r.n_total, planning.pi);
  r.n_experimental = r.n_total - r.n_control;
  TrialDesign at_n = planning;
  at_n.accrual_a = r.n_total / planning.rate_r;
  const auto ms = mu_sigma(at_n);
  r.mu = ms.mu;
  r.sigma = ms.sigma;
  r.achieved_power = detail::power_from(at_n, ms);
  return r;
}

/// Required number of events for the two-sample log-rank test.
inline double schoenfeld_events(double alpha, double target_power,
                                double omega0, double pi = 1.0) {
  const double z = normal_quantile(1.0 - alpha / 2.0) + normal_quantile(target_power);
  const double l = std::log(omega0);
  return z * z * (1.0 + pi) * (1.0 + pi) / (pi * l * l);
}

/// Expected number of events by calendar time a + f with r/2 patients per
/// year and arm: control law in arm A, omega0-scaled law in arm B.
inline double expected_events_two_arm(const TrialDesign& d, double accrual) {
  const WeibullModel a_law(d.s1, d.kappa);
  const WeibullModel b_law = a_law.scaled(d.omega0);
  auto f = [&](double t) { return a_law.cdf(t) + b_law.cdf(t); };
  const double lo = d.followup_f;
  const double hi = d.followup_f + accrual;
  return 0.5 * d.rate_r *
         quad::integrate(f, lo, hi, {1e-11, 1e-13, 2000}).value;
}

/// Schoenfeld sizing of the two-sample log-rank comparator (equal
/// allocation): solve expected events = required events for a, then
/// n = ceil(r a) rounded up to even.
inline DesignResult schoenfeld_sample_size(const TrialDesign& planning,
                                           double target_power,
                                           const SizingOptions& opt = {}) {
  planning.validate_planning();
  if (planning.pi != 1.0) {
    throw std::invalid_argument("Schoenfeld sizing requires pi = 1");
  }
  detail::check_sizing(planning, target_power);
  const double d = schoenfeld_events(planning.alpha, target_power,
                                     planning.omega0, planning.pi);
  auto reaches = [&](double a) {
    return expected_events_two_arm(planning, a) >= d;
  };
  const auto bracket = roots::bracket_by_doubling(reaches, opt.a_start, opt.a_max);
  const double a = roots::bisect_threshold(reaches, bracket, opt.a_tol);

  DesignResult r;
  r.accrual_a = a;
  r.required_events = d;
  r.n_total = static_cast<int>(std::ceil(planning.rate_r * a - 1e-6));
  if (r.n_total % 2 != 0) ++r.n_total;
  r.n_control = r.n_total / 2;
  r.n_experimental = r.n_total - r.n_control;
  const double events = expected_events_two_arm(planning, r.n_total / planning.rate_r);
  const double pi = planning.pi;
  r.achieved_power =
      normal_cdf(std::sqrt(events * pi) / (1.0 + pi) * std::fabs(std::log(planning.omega0)) -
                 normal_quantile(1.0 - planning.alpha / 2.0));
  return r;
}

/// Time-indexed drift mu(s) and variance Sigma^2(s) of the limiting process
/// under contiguous alternatives omega_n = exp(-gamma / sqrt(n)).
struct DriftVariance {
  std::function<double(double)> mu;
  std::function<double(double)> sigma2;
};

inline DriftVariance drift_variance_functions(const TrialDesign& design,
                                              double gamma) {
  design.validate();
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be nonnegative");
  auto integrals = std::make_shared<detail::PlanningIntegrals>(design);
  const double pi = design.pi;

  // int_0^inf F_T(s ^ u) f_C(u) du
  auto events_at = [integrals](double s) {
    if (s <= 0.0) return 0.0;
    const auto& c = integrals->censoring();
    return integrals->events_until(s) +
           integrals->model().cdf(s) * c.survival(s);
  };

  DriftVariance out;
  out.mu = [=](double s) {
    return -gamma * std::sqrt(pi / (1.0 + pi)) * events_at(s);
  };
  out.sigma2 = [=](double s) {
    if (s <= 0.0) return 0.0;
    const double end = integrals->censoring().end();
    const double upper = std::min(s, end);
    double pair_term = integrals->variance_term_until(upper);
    if (s < end) pair_term += integrals->pair_mass(s) / 2.0;
    return events_at(s) + 2.0 * pi * pair_term;
  };
  return out;
}

}  // namespace refcurve
