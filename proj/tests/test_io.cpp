#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "refcurve/io/csv.hpp"
#include "refcurve/io/json.hpp"

using namespace refcurve;

namespace {

io::InputTable parse(const std::string& text, const io::CsvOptions& opt = {}) {
  std::istringstream in(text);
  return io::read_table(in, opt, "t.csv");
}

std::string error_of(const std::string& text, const io::CsvOptions& opt = {}) {
  try {
    parse(text, opt);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Csv, ReadsColumnsByName) {
  const auto t = parse("id,status,time\n1,1,2.5\n2,0,  3\n\n3,1,4e-1\n");
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_FALSE(t.has_group);
  EXPECT_EQ(t.rows[0].time, 2.5);
  EXPECT_TRUE(t.rows[0].event);
  EXPECT_FALSE(t.rows[1].event);
  EXPECT_EQ(t.rows[2].time, 0.4);
}

TEST(Csv, GroupsAndFilter) {
  const std::string text = "time,status,group,site\n1,1,A,x\n2,0,B,y\n3,1,B,x\n";
  const auto t = parse(text);
  EXPECT_TRUE(t.has_group);
  EXPECT_EQ(io::cohort_of(t, Group::B).size(), 2u);
  EXPECT_EQ(io::cohort_of(t).size(), 3u);
  io::CsvOptions opt;
  opt.filter = std::make_pair(std::string("site"), std::string("x"));
  const auto f = parse(text, opt);
  ASSERT_EQ(f.rows.size(), 2u);
  EXPECT_EQ(f.rows[1].time, 3.0);
}

TEST(Csv, CustomStatusCodesAndTimeUnit) {
  io::CsvOptions opt;
  opt.event_values = {"2"};
  opt.time_divisor = 12.0;
  opt.time_column = "months";
  const auto t = parse("months,status\n24,2\n6,1\n12,0\n", opt);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_TRUE(t.rows[0].event);
  EXPECT_FALSE(t.rows[1].event);
  EXPECT_DOUBLE_EQ(t.rows[0].time, 2.0);
  EXPECT_DOUBLE_EQ(t.rows[1].time, 0.5);
}

TEST(Csv, ErrorsNameFileAndLine) {
  EXPECT_EQ(error_of("time,status\n1,1\n-2,1\n"), "t.csv:3: invalid time '-2'");
  EXPECT_EQ(error_of("time,status\n1,1\nabc,1\n"), "t.csv:3: invalid time 'abc'");
  EXPECT_EQ(error_of("time,status\n1,2\n"), "t.csv:2: status must be 0 or 1, got '2'");
  EXPECT_EQ(error_of("time,status\n1\n"), "t.csv:2: expected 2 fields, found 1");
  EXPECT_EQ(error_of("time,status,group\n1,1,C\n"), "t.csv:2: group must be A or B, got 'C'");
  EXPECT_EQ(error_of(""), "t.csv: missing header row");
  EXPECT_EQ(error_of("t,status\n"), "t.csv: header must contain columns 'time' and 'status'");
  EXPECT_EQ(error_of("time,status\nnan,1\n"), "t.csv:2: invalid time 'nan'");
  EXPECT_THROW(io::read_table_file("/nonexistent/file.csv", {}), std::invalid_argument);
}

TEST(Json, TestResultRoundTripIsExact) {
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    TestResult r;
    r.statistic = u(g);
    r.m_hat = u(g);
    r.variance = std::fabs(u(g));
    if (i % 2) r.variance_oslr = std::fabs(u(g));
    r.p_value = std::fabs(u(g)) / 10.0;
    r.reject = i % 3 == 0;
    r.alpha = 0.05;
    const nlohmann::json j = r;
    const auto back = nlohmann::json::parse(j.dump()).get<TestResult>();
    EXPECT_EQ(back.statistic, r.statistic);
    EXPECT_EQ(back.m_hat, r.m_hat);
    EXPECT_EQ(back.variance, r.variance);
    EXPECT_EQ(back.variance_oslr, r.variance_oslr);
    EXPECT_EQ(back.p_value, r.p_value);
    EXPECT_EQ(back.reject, r.reject);
    EXPECT_EQ(back.alpha, r.alpha);
  }
}

TEST(Json, DesignResultRoundTrip) {
  DesignResult r;
  r.accrual_a = 0.7600000123;
  r.n_total = 76;
  r.n_control = 38;
  r.n_experimental = 38;
  r.achieved_power = 0.80123456789;
  r.mu = 3.3;
  r.sigma = 1.1;
  const nlohmann::json j = r;
  const auto back = nlohmann::json::parse(j.dump()).get<DesignResult>();
  EXPECT_EQ(back.accrual_a, r.accrual_a);
  EXPECT_EQ(back.n_total, r.n_total);
  EXPECT_EQ(back.achieved_power, r.achieved_power);
  EXPECT_EQ(back.sigma, r.sigma);
}
