#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "refcurve/step_function.hpp"
#include "refcurve/survival_core.hpp"

using namespace refcurve;

namespace {

Cohort make(std::vector<SubjectRecord> recs) { return Cohort(std::move(recs)); }

const std::vector<SubjectRecord> kThree = {{1.0, true, Group::A},
                                           {1.5, false, Group::A},
                                           {2.0, true, Group::A}};

// Relative agreement up to a few rounding steps of the double accumulation.
void expect_close(double got, double exact) {
  EXPECT_NEAR(got, exact, 8 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(exact)));
}

}  // namespace

TEST(StepFunction, RightContinuousWithLeftLimits) {
  StepFunction f(0.0, {1.0, 2.0}, {5.0, 7.0});
  EXPECT_EQ(f(0.5), 0.0);
  EXPECT_EQ(f(1.0), 5.0);
  EXPECT_EQ(f.left_limit(1.0), 0.0);
  EXPECT_EQ(f(1.999), 5.0);
  EXPECT_EQ(f(2.0), 7.0);
  EXPECT_EQ(f(100.0), 7.0);
  EXPECT_EQ(f.jump_at(2.0), 2.0);
  EXPECT_EQ(f.jump_at(1.5), 0.0);
  EXPECT_EQ(f.final_value(), 7.0);
}

TEST(StepFunction, RejectsUnsortedOrNegativeTimes) {
  EXPECT_THROW(StepFunction(0.0, {2.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(StepFunction(0.0, {1.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(StepFunction(0.0, {-1.0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(StepFunction(0.0, {1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST(StepFunction, CombineOnUnionGrid) {
  StepFunction a(1.0, {1.0, 3.0}, {2.0, 4.0});
  StepFunction b(0.0, {2.0}, {10.0});
  auto c = combine(a, b, [](double x, double y) { return x + y; });
  EXPECT_EQ(c(0.0), 1.0);
  EXPECT_EQ(c(1.0), 2.0);
  EXPECT_EQ(c(2.5), 12.0);
  EXPECT_EQ(c(3.0), 14.0);
  EXPECT_EQ(union_grid(a, b), (std::vector<double>{1.0, 2.0, 3.0}));
}

TEST(Cohort, RejectsInvalidTimes) {
  EXPECT_THROW(make({{-0.1, true, Group::A}}), std::invalid_argument);
  EXPECT_THROW(make({{std::nan(""), true, Group::A}}), std::invalid_argument);
  EXPECT_THROW(make({{INFINITY, false, Group::A}}), std::invalid_argument);
}

TEST(Cohort, EmptyCohortIsAnError) {
  Cohort empty;
  EXPECT_THROW(counting_process(empty), std::invalid_argument);
  EXPECT_THROW(at_risk(empty), std::invalid_argument);
  EXPECT_THROW(nelson_aalen(empty), std::invalid_argument);
  EXPECT_THROW(na_variance(empty), std::invalid_argument);
  EXPECT_THROW(kaplan_meier(empty), std::invalid_argument);
  try {
    nelson_aalen(empty);
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "empty cohort");
  }
}

TEST(CountingProcess, HandCounts) {
  const auto n = counting_process(make(kThree));
  EXPECT_EQ(n(0.5), 0.0);
  EXPECT_EQ(n(1.0), 1.0);
  EXPECT_EQ(n(1.7), 1.0);
  EXPECT_EQ(n(2.0), 2.0);

  const auto tied = counting_process(make({{1, true, Group::A}, {1, true, Group::A}}));
  EXPECT_EQ(tied(0.99), 0.0);
  EXPECT_EQ(tied(1.0), 2.0);

  const auto censored = counting_process(make({{1, false, Group::A}, {3, false, Group::A}}));
  EXPECT_EQ(censored(10.0), 0.0);
}

TEST(AtRisk, CensoredSubjectIsAtRiskAtItsOwnTime) {
  const auto y = at_risk(make(kThree));
  EXPECT_EQ(y(0.0), 3.0);
  EXPECT_EQ(y(1.0), 3.0);
  EXPECT_EQ(y(1.2), 2.0);
  EXPECT_EQ(y(1.5), 2.0);
  EXPECT_EQ(y(2.0), 1.0);
  EXPECT_EQ(y(2.1), 0.0);

  const auto tie = at_risk(make({{1, true, Group::A}, {1, false, Group::A}}));
  EXPECT_EQ(tie(1.0), 2.0);
}

TEST(NelsonAalen, HandValues) {
  const auto na = nelson_aalen(make(kThree));
  EXPECT_DOUBLE_EQ(na(1.0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(na(1.5), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(na(2.0), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(na(50.0), 4.0 / 3.0);

  const auto tied = nelson_aalen(
      make({{1, true, Group::A}, {1, true, Group::A}, {2, false, Group::A}}));
  EXPECT_DOUBLE_EQ(tied(1.0), 2.0 / 3.0);

  const auto none = nelson_aalen(make({{1, false, Group::A}, {2, false, Group::A}}));
  EXPECT_EQ(none(5.0), 0.0);
}

TEST(NaVariance, HandValues) {
  EXPECT_DOUBLE_EQ(na_variance(make(kThree))(2.0), 10.0 / 3.0);
  EXPECT_DOUBLE_EQ(na_variance(make({{1, true, Group::A}}))(1.0), 1.0);
  EXPECT_EQ(na_variance(make({{1, false, Group::A}}))(3.0), 0.0);
}

TEST(KaplanMeier, HandValues) {
  const auto km = kaplan_meier(make(kThree));
  EXPECT_DOUBLE_EQ(km(0.5), 1.0);
  EXPECT_DOUBLE_EQ(km(1.0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(km(1.9), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(km(2.0), 0.0);
  EXPECT_EQ(kaplan_meier(make({{1, false, Group::A}}))(9.0), 1.0);
  EXPECT_EQ(kaplan_meier(make({{1, true, Group::A}}))(1.0), 0.0);
}

TEST(KaplanMeier, CensoringTargetSwapsRoles) {
  const auto g = kaplan_meier(make(kThree), KmTarget::censoring);
  EXPECT_DOUBLE_EQ(g(1.0), 1.0);
  EXPECT_DOUBLE_EQ(g(1.5), 0.5);
  EXPECT_DOUBLE_EQ(g(2.0), 0.5);
}

TEST(SurvivalCore, RandomCohortsMatchDefinitions) {
  std::mt19937_64 g(20260101);
  for (int rep = 0; rep < 400; ++rep) {
    const auto recs = oracle::random_records(g, 8);
    const Cohort c(recs);
    const auto n = counting_process(c);
    const auto y = at_risk(c);
    const auto na = nelson_aalen(c);
    const auto sv = na_variance(c);
    const auto km = kaplan_meier(c);
    const auto kc = kaplan_meier(c, KmTarget::censoring);
    for (double s = 0.0; s <= 3.5; s += 0.25) {
      EXPECT_EQ(n(s), oracle::events_by(recs, s));
      EXPECT_EQ(y(s), oracle::at_risk(recs, s));
      expect_close(na(s), oracle::to_double(oracle::nelson_aalen(recs, s)));
      expect_close(sv(s), oracle::to_double(oracle::na_variance(recs, s)));
      expect_close(km(s), oracle::to_double(oracle::kaplan_meier(recs, s)));
      expect_close(kc(s), oracle::to_double(oracle::kaplan_meier(recs, s, true)));
    }
  }
}

TEST(SurvivalCore, DuplicatingSubjectsKeepsKaplanMeierAndVariance) {
  std::mt19937_64 g(7);
  for (int rep = 0; rep < 100; ++rep) {
    auto recs = oracle::random_records(g, 10);
    auto twice = recs;
    twice.insert(twice.end(), recs.begin(), recs.end());
    const Cohort one(recs), two(twice);
    const auto km1 = kaplan_meier(one), km2 = kaplan_meier(two);
    const auto s1 = na_variance(one), s2 = na_variance(two);
    for (double s = 0.0; s <= 3.5; s += 0.5) {
      EXPECT_NEAR(km1(s), km2(s), 1e-14);
      EXPECT_NEAR(s1(s), s2(s), 1e-12 * std::max(1.0, s1(s)));
    }
  }
}
