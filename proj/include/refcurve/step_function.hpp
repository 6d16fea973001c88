#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <span>
#include <stdexcept>
#include <vector>

namespace refcurve {

/// Right-continuous piecewise-constant function on [0, inf).
///
/// The function equals `initial_value` on [0, t_1), `values[k]` on
/// [t_{k+1}, t_{k+2}) and `values.back()` from the last jump onwards
/// (constant extrapolation).
class StepFunction {
 public:
  StepFunction() = default;

  explicit StepFunction(double initial_value) : initial_(initial_value) {}

  StepFunction(double initial_value, std::vector<double> jump_times,
               std::vector<double> values)
      : initial_(initial_value),
        times_(std::move(jump_times)),
        values_(std::move(values)) {
    if (times_.size() != values_.size()) {
      throw std::invalid_argument(
          "StepFunction: jump_times and values differ in length");
    }
    for (std::size_t k = 0; k < times_.size(); ++k) {
      if (!std::isfinite(times_[k]) || times_[k] < 0.0) {
        throw std::invalid_argument(
            "StepFunction: jump times must be finite and nonnegative");
      }
      if (k > 0 && !(times_[k - 1] < times_[k])) {
        throw std::invalid_argument(
            "StepFunction: jump times must be strictly increasing");
      }
    }
  }

  /// Value at t (right-continuous).
  double operator()(double t) const {
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return initial_;
    return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
  }

  /// Left limit at t, i.e. the value on an interval (t - eps, t).
  double left_limit(double t) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return initial_;
    return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
  }

  /// Size of the jump at t (zero when t is not a jump time).
  double jump_at(double t) const { return (*this)(t) - left_limit(t); }

  double initial_value() const { return initial_; }
  double final_value() const {
    return values_.empty() ? initial_ : values_.back();
  }
  std::span<const double> jump_times() const { return times_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return times_.size(); }

 private:
  double initial_ = 0.0;
  std::vector<double> times_;
  std::vector<double> values_;
};

/// Sorted union of the jump times of two step functions.
inline std::vector<double> union_grid(const StepFunction& a,
                                      const StepFunction& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.jump_times().begin(), a.jump_times().end(),
                 b.jump_times().begin(), b.jump_times().end(),
                 std::back_inserter(out));
  return out;
}

/// Pointwise combination `op(a(t), b(t))` on the union grid.
template <typename BinaryOp>
StepFunction combine(const StepFunction& a, const StepFunction& b,
                     BinaryOp op) {
  auto grid = union_grid(a, b);
  std::vector<double> vals;
  vals.reserve(grid.size());
  for (double t : grid) vals.push_back(op(a(t), b(t)));
  return StepFunction(op(a.initial_value(), b.initial_value()),
                      std::move(grid), std::move(vals));
}

}  // namespace refcurve
