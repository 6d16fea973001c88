#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

#include "refcurve/design.hpp"
#include "refcurve/errors.hpp"
#include "refcurve/normal.hpp"

using namespace refcurve;

namespace {

// int_f^{a+f} F_T(u) / a du for exponential control times, closed form.
double exponential_event_fraction(double s1, double a, double f) {
  const double l = -std::log(s1);
  return 1.0 - (std::exp(-l * f) - std::exp(-l * (a + f))) / (l * a);
}

TrialDesign base(double kappa = 1.0) {
  TrialDesign d;
  d.accrual_a = 1.0;
  d.followup_f = 3.0;
  d.rate_r = 100.0;
  d.kappa = kappa;
  return d;
}

}  // namespace

TEST(Weibull, HandValues) {
  const WeibullModel m(0.5, 1.0);
  EXPECT_DOUBLE_EQ(m.survival(1.0), 0.5);
  EXPECT_DOUBLE_EQ(m.cum_hazard(2.0), 2.0 * std::log(2.0));
  EXPECT_DOUBLE_EQ(m.hazard(7.0), std::log(2.0));
  const WeibullModel w(0.5, 2.0);
  EXPECT_NEAR(w.survival(2.0), std::pow(0.5, 4.0), 1e-16);
  EXPECT_NEAR(w.sample(w.survival(1.3)), 1.3, 1e-14);
  EXPECT_NEAR(w.scaled(0.5).cum_hazard(1.7), 0.5 * w.cum_hazard(1.7), 1e-15);
  EXPECT_EQ(WeibullModel(0.5, 0.5).hazard(0.0), INFINITY);
  EXPECT_THROW(WeibullModel(1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(WeibullModel(0.5, 0.0), std::invalid_argument);
}

TEST(Design, EventFractionMatchesClosedForm) {
  for (double a : {0.5, 1.0, 4.0}) {
    for (double f : {0.0, 1.0, 3.0}) {
      TrialDesign d = base();
      d.accrual_a = a;
      d.followup_f = f;
      EXPECT_NEAR(mu_sigma(d).event_fraction, exponential_event_fraction(0.5, a, f), 1e-10);
    }
  }
}

TEST(Design, SigmaSquaredEqualsOnePlusPiTimesEventFraction) {
  // 2 int sigma_A f_X S_X = int S_X^2 d sigma_A = int F_T f_C, whatever the
  // shape; checked against an independent Boost quadrature of int F_T f_C.
  for (double kappa : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    for (double pi : {0.5, 1.0, 2.0}) {
      TrialDesign d = base(kappa);
      d.pi = pi;
      d.accrual_a = 1.5;
      const WeibullModel m(d.s1, kappa);
      auto f = [&](double u) { return -std::expm1(-m.cum_hazard(u)) / d.accrual_a; };
      const double i1 = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          f, d.followup_f, d.followup_f + d.accrual_a, 10, 1e-14);
      const auto ms = mu_sigma(d);
      EXPECT_NEAR(ms.event_fraction, i1, 1e-10) << kappa;
      EXPECT_NEAR(ms.sigma * ms.sigma, (1.0 + pi) * i1, 2e-7) << kappa << " " << pi;
      EXPECT_NEAR(ms.mu, std::sqrt(d.n() * pi / (1.0 + pi)) * i1, 1e-8);
    }
  }
}

TEST(Design, PowerAtNullIsHalfAlpha) {
  TrialDesign d = base();
  d.omega0 = 1.0;
  EXPECT_DOUBLE_EQ(power(d), 0.025);
}

TEST(Design, PowerDecreasesWithOmegaAndGrowsWithRate) {
  double last = 1.0;
  for (double w : {0.3, 0.5, 0.7, 0.9}) {
    TrialDesign d = base();
    d.omega0 = w;
    const double p = power(d);
    EXPECT_LT(p, last);
    last = p;
  }
  TrialDesign d = base();
  TrialDesign d4 = d;
  d4.rate_r = 4.0 * d.rate_r;
  EXPECT_NEAR(mu_sigma(d4).mu / mu_sigma(d).mu, 2.0, 1e-6);
}

TEST(Design, PowerFormula) {
  TrialDesign d = base();
  d.rate_r = 40.0;
  const double i1 = exponential_event_fraction(0.5, 1.0, 3.0);
  const double mu = std::sqrt(40.0 * 0.5) * i1;
  const double sigma = std::sqrt(2.0 * i1);
  const double expected = normal_cdf(normal_quantile(0.025) - std::log(0.5) * mu / sigma);
  EXPECT_NEAR(power(d), expected, 1e-7);
}

TEST(Design, RequiredAccrualIsMinimal) {
  for (double kappa : {0.5, 1.0, 2.0}) {
    TrialDesign d = base(kappa);
    const auto r = required_accrual(d, 0.8);
    TrialDesign at = d;
    at.accrual_a = r.accrual_a;
    EXPECT_GE(power(at), 0.8);
    at.accrual_a = r.accrual_a * (1.0 - 1e-3);
    EXPECT_LT(power(at), 0.8);
    EXPECT_EQ(r.n_total, static_cast<int>(std::ceil(d.rate_r * r.accrual_a - 1e-6)));
    EXPECT_EQ(r.n_control + r.n_experimental, r.n_total);
    EXPECT_GE(r.achieved_power, 0.8 - 1e-3);
  }
}

TEST(Design, UnequalAllocationSplit) {
  TrialDesign d = base();
  d.pi = 0.5;
  const auto r = required_accrual(d, 0.8);
  EXPECT_EQ(r.n_control, static_cast<int>(std::lround(r.n_total / 1.5)));
}

TEST(Design, InfeasibleAndInvalidSizing) {
  TrialDesign d = base();
  d.rate_r = 1e-3;
  EXPECT_THROW(required_accrual(d, 0.9), NumericalError);
  d = base();
  d.omega0 = 1.0;
  EXPECT_THROW(required_accrual(d, 0.8), std::invalid_argument);
  d = base();
  EXPECT_THROW(required_accrual(d, 0.01), std::invalid_argument);
  d.pi = 0.0;
  EXPECT_THROW(power(d), std::invalid_argument);
  d = base();
  d.accrual_a = 0.0;
  EXPECT_THROW(power(d), std::invalid_argument);
}

TEST(Schoenfeld, RequiredEvents) {
  const double z = 1.959963984540054 + 0.8416212335729143;
  const double l = std::log(0.5);
  EXPECT_NEAR(schoenfeld_events(0.05, 0.8, 0.5), 4.0 * z * z / (l * l), 1e-10);
  EXPECT_NEAR(schoenfeld_events(0.05, 0.8, 0.5), 65.35, 0.01);
}

TEST(Schoenfeld, SampleSizeMeetsEventTarget) {
  TrialDesign d = base();
  const auto r = schoenfeld_sample_size(d, 0.8);
  EXPECT_EQ(r.n_total % 2, 0);
  EXPECT_EQ(r.n_control, r.n_total / 2);
  // closed-form expected events for exponential arms
  auto events = [&](double a) {
    return 0.5 * d.rate_r * a *
           (exponential_event_fraction(0.5, a, 3.0) + exponential_event_fraction(std::sqrt(0.5), a, 3.0));
  };
  EXPECT_NEAR(events(r.accrual_a), r.required_events, 1e-5);
  EXPECT_GE(events(r.n_total / d.rate_r), r.required_events - 1e-6);
  EXPECT_LT(events((r.n_total - 2) / d.rate_r), r.required_events);

  d.pi = 2.0;
  EXPECT_THROW(schoenfeld_sample_size(d, 0.8), std::invalid_argument);
}

TEST(DriftVariance, Endpoints) {
  TrialDesign d = base(2.0);
  const auto dv = drift_variance_functions(d, 1.3);
  EXPECT_EQ(dv.mu(0.0), 0.0);
  EXPECT_EQ(dv.sigma2(0.0), 0.0);
  const auto ms = mu_sigma(d);
  EXPECT_NEAR(dv.sigma2(10.0), ms.sigma * ms.sigma, 1e-7);
  EXPECT_NEAR(dv.mu(10.0), -1.3 * std::sqrt(0.5) * ms.event_fraction, 1e-9);
  EXPECT_EQ(drift_variance_functions(d, 0.0).mu(2.0), 0.0);
  double last = 0.0;
  for (double s = 0.25; s <= 4.0; s += 0.25) {
    const double v = dv.sigma2(s);
    EXPECT_GE(v, last - 1e-12);
    last = v;
  }
}
