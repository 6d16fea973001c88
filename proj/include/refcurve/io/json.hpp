#pragma once

#include <json.hpp>

#include "refcurve/design.hpp"
#include "refcurve/inflation.hpp"
#include "refcurve/simulation.hpp"
#include "refcurve/test_engine.hpp"

namespace refcurve {

inline void to_json(nlohmann::json& j, const TestResult& r) {
  j = {{"statistic", r.statistic},
       {"m_hat", r.m_hat},
       {"variance", r.variance},
       {"p_value", r.p_value},
       {"reject", r.reject},
       {"alpha", r.alpha}};
  if (r.variance_oslr) j["variance_oslr"] = *r.variance_oslr;
}

inline void from_json(const nlohmann::json& j, TestResult& r) {
  j.at("statistic").get_to(r.statistic);
  j.at("m_hat").get_to(r.m_hat);
  j.at("variance").get_to(r.variance);
  j.at("p_value").get_to(r.p_value);
  j.at("reject").get_to(r.reject);
  j.at("alpha").get_to(r.alpha);
  if (j.contains("variance_oslr")) r.variance_oslr = j.at("variance_oslr").get<double>();
}

inline void to_json(nlohmann::json& j, const TrialDesign& d) {
  j = {{"accrual", d.accrual_a}, {"followup", d.followup_f},
       {"rate", d.rate_r},       {"pi", d.pi},
       {"alpha", d.alpha},       {"omega0", d.omega0},
       {"kappa", d.kappa},       {"s1", d.s1}};
}

inline void to_json(nlohmann::json& j, const DesignResult& r) {
  j = {{"accrual", r.accrual_a},
       {"n_total", r.n_total},
       {"n_control", r.n_control},
       {"n_experimental", r.n_experimental},
       {"achieved_power", r.achieved_power},
       {"mu", r.mu},
       {"sigma", r.sigma}};
  if (r.required_events > 0.0) j["required_events"] = r.required_events;
}

inline void from_json(const nlohmann::json& j, DesignResult& r) {
  j.at("accrual").get_to(r.accrual_a);
  j.at("n_total").get_to(r.n_total);
  j.at("n_control").get_to(r.n_control);
  j.at("n_experimental").get_to(r.n_experimental);
  j.at("achieved_power").get_to(r.achieved_power);
  j.at("mu").get_to(r.mu);
  j.at("sigma").get_to(r.sigma);
  r.required_events = j.value("required_events", 0.0);
}

inline void to_json(nlohmann::json& j, const TestSummary& s) {
  j = {{"rejections", s.rejections},
       {"rate", s.rate},
       {"mc_se", s.mc_se},
       {"degenerate", s.degenerate},
       {"replications", s.replications}};
}

inline void to_json(nlohmann::json& j, const SimulationReport& r) {
  j = {{"replications", r.replications},
       {"seed", r.seed},
       {"n_total", r.n_total},
       {"n_control", r.n_control},
       {"n_experimental", r.n_experimental}};
  if (r.new_test.enabled) j["new"] = r.new_test;
  if (r.oslr.enabled) j["oslr"] = r.oslr;
  if (r.two_sample.enabled) j["two_sample"] = r.two_sample;
}

inline void to_json(nlohmann::json& j, const SweepRow& r) {
  j = {{"value", r.value}, {"valid", r.valid}};
  if (r.valid) {
    j["level"] = r.level;
    j["var_oslr"] = r.var_oslr;
    j["var_new"] = r.var_new;
  } else {
    j["error"] = r.error;
  }
}

inline void to_json(nlohmann::json& j, const ReproCell& c) {
  j = {{"cell", c.label},          {"measure", c.measure},
       {"n", c.n_total},           {"empirical", c.empirical},
       {"published", c.published}, {"abs_diff", c.abs_diff()},
       {"mc_se", c.mc_se}};
}

}  // namespace refcurve
