#pragma once

// Counting-process primitives and nonparametric estimators for
// right-censored survival data.
//
// Conventions:
//   * tied event times contribute jointly, d_t / Y(t) with the pre-jump
//     number at risk;
//   * a subject censored at t is still at risk at t;
//   * 0/0 := 0 whenever nobody is at risk;
//   * all step functions extrapolate as constants past the last time.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "refcurve/step_function.hpp"

namespace refcurve {

enum class Group { A, B };

struct SubjectRecord {
  double time = 0.0;  // min(T, C)
  bool event = false;
  Group group = Group::A;
};

/// One row per distinct observed time, sorted ascending.
struct RiskTable {
  std::vector<double> times;
  std::vector<int> events;    // d_t
  std::vector<int> censored;  // c_t
  std::vector<int> at_risk;   // Y(t), subjects with time >= t
};

/// Observations from a single group. Immutable after construction.
class Cohort {
 public:
  Cohort() = default;

  explicit Cohort(std::vector<SubjectRecord> records)
      : records_(std::move(records)) {
    for (const auto& r : records_) {
      if (!std::isfinite(r.time) || r.time < 0.0) {
        throw std::invalid_argument(
            "Cohort: times must be finite and nonnegative");
      }
    }
    build_table();
  }

  /// Convenience: parallel arrays of times and event flags.
  static Cohort from_arrays(std::span<const double> times,
                            std::span<const bool> events,
                            Group group = Group::A) {
    if (times.size() != events.size()) {
      throw std::invalid_argument("Cohort: times/events size mismatch");
    }
    std::vector<SubjectRecord> recs;
    recs.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
      recs.push_back({times[i], events[i], group});
    }
    return Cohort(std::move(recs));
  }

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  std::span<const SubjectRecord> records() const { return records_; }
  const RiskTable& table() const { return table_; }

  /// Observed times sorted ascending.
  const std::vector<double>& sorted_times() const { return sorted_times_; }

  int event_count() const { return total_events_; }
  double max_time() const {
    return sorted_times_.empty() ? 0.0 : sorted_times_.back();
  }

  /// Throws std::invalid_argument("empty cohort") when there are no records.
  void require_nonempty() const {
    if (records_.empty()) throw std::invalid_argument("empty cohort");
  }

 private:
  void build_table() {
    std::vector<std::pair<double, bool>> obs;
    obs.reserve(records_.size());
    for (const auto& r : records_) obs.emplace_back(r.time, r.event);
    std::sort(obs.begin(), obs.end());

    sorted_times_.reserve(obs.size());
    int remaining = static_cast<int>(obs.size());
    for (std::size_t k = 0; k < obs.size();) {
      const double t = obs[k].first;
      int d = 0;
      int c = 0;
      for (; k < obs.size() && obs[k].first == t; ++k) {
        sorted_times_.push_back(t);
        (obs[k].second ? d : c) += 1;
      }
      table_.times.push_back(t);
      table_.events.push_back(d);
      table_.censored.push_back(c);
      table_.at_risk.push_back(remaining);
      remaining -= d + c;
      total_events_ += d;
    }
  }

  std::vector<SubjectRecord> records_;
  std::vector<double> sorted_times_;
  RiskTable table_;
  int total_events_ = 0;
};

/// s -> N(s), the number of observed events with time <= s.
inline StepFunction counting_process(const Cohort& cohort) {
  cohort.require_nonempty();
  const auto& tab = cohort.table();
  std::vector<double> times;
  std::vector<double> vals;
  double n = 0.0;
  for (std::size_t k = 0; k < tab.times.size(); ++k) {
    if (tab.events[k] == 0) continue;
    n += tab.events[k];
    times.push_back(tab.times[k]);
    vals.push_back(n);
  }
  return StepFunction(0.0, std::move(times), std::move(vals));
}

/// Number at risk Y(s) = #{time >= s}.
///
/// Y is left-continuous; it is stored as the right-continuous survivor count
/// s -> #{time > s} and evaluated through its left limit.
class AtRisk {
 public:
  explicit AtRisk(StepFunction survivors) : survivors_(std::move(survivors)) {}

  double operator()(double s) const { return survivors_.left_limit(s); }

  /// s -> #{time > s}.
  const StepFunction& survivors() const { return survivors_; }

 private:
  StepFunction survivors_;
};

inline AtRisk at_risk(const Cohort& cohort) {
  cohort.require_nonempty();
  const auto& tab = cohort.table();
  std::vector<double> times(tab.times);
  std::vector<double> vals;
  vals.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    vals.push_back(tab.at_risk[k] - tab.events[k] - tab.censored[k]);
  }
  return AtRisk(StepFunction(static_cast<double>(cohort.size()),
                             std::move(times), std::move(vals)));
}

namespace detail {

// Cumulative sum over event times of weight(d_t, Y_t).
template <typename Weight>
StepFunction cumulative_over_events(const Cohort& cohort, Weight weight) {
  cohort.require_nonempty();
  const auto& tab = cohort.table();
  std::vector<double> times;
  std::vector<double> vals;
  double acc = 0.0;
  for (std::size_t k = 0; k < tab.times.size(); ++k) {
    if (tab.events[k] == 0) continue;
    // Y_t >= d_t > 0 here, so 0/0 cannot occur.
    acc += weight(static_cast<double>(tab.events[k]),
                  static_cast<double>(tab.at_risk[k]));
    times.push_back(tab.times[k]);
    vals.push_back(acc);
  }
  return StepFunction(0.0, std::move(times), std::move(vals));
}

}  // namespace detail

/// Nelson-Aalen cumulative hazard, sum of d_t / Y(t) over event times <= s.
inline StepFunction nelson_aalen(const Cohort& cohort) {
  return detail::cumulative_over_events(
      cohort, [](double d, double y) { return d / y; });
}

/// Scaled variance function n * sum of d_t / Y(t)^2 over event times <= s.
inline StepFunction na_variance(const Cohort& cohort) {
  const double n = static_cast<double>(cohort.size());
  auto sum = detail::cumulative_over_events(
      cohort, [](double d, double y) { return d / (y * y); });
  std::vector<double> vals(sum.values().begin(), sum.values().end());
  for (double& v : vals) v *= n;
  return StepFunction(0.0, {sum.jump_times().begin(), sum.jump_times().end()},
                      std::move(vals));
}

enum class KmTarget { event, censoring };

/// Product-limit estimate. With KmTarget::censoring the roles of event and
/// censoring flags are swapped, giving the censoring survivor function.
inline StepFunction kaplan_meier(const Cohort& cohort,
                                 KmTarget target = KmTarget::event) {
  cohort.require_nonempty();
  const auto& tab = cohort.table();
  std::vector<double> times;
  std::vector<double> vals;
  double s = 1.0;
  for (std::size_t k = 0; k < tab.times.size(); ++k) {
    const int d =
        target == KmTarget::event ? tab.events[k] : tab.censored[k];
    if (d == 0) continue;
    s *= 1.0 - static_cast<double>(d) / static_cast<double>(tab.at_risk[k]);
    times.push_back(tab.times[k]);
    vals.push_back(s);
  }
  return StepFunction(1.0, std::move(times), std::move(vals));
}

}  // namespace refcurve
