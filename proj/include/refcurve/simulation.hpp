#pragma once

// Monte Carlo trials under uniform accrual with Weibull survival, and
// rejection rates of the new test, the classical one-sample log-rank test
// against the control Nelson-Aalen curve, and the two-sample log-rank test.
//
// Replicate i draws from its own generator seeded by a mix of (seed, i), so
// results do not depend on the number of worker threads.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "refcurve/design.hpp"
#include "refcurve/errors.hpp"
#include "refcurve/published_tables.hpp"
#include "refcurve/survival_core.hpp"
#include "refcurve/test_engine.hpp"

namespace refcurve {

struct TestSelection {
  bool new_test = true;
  bool oslr = true;
  bool two_sample = true;
};

struct SimulationConfig {
  TrialDesign design;              // omega0 is unused here
  double omega_true = 1.0;
  std::optional<int> n_total;      // when set, accrual becomes n / r
  int replications = 1000;
  std::uint64_t seed = 0;
  TestSelection tests;
  unsigned threads = 1;

  int total_size() const {
    if (n_total) return *n_total;
    return static_cast<int>(std::lround(design.rate_r * design.accrual_a));
  }
  double accrual() const {
    return n_total ? *n_total / design.rate_r : design.accrual_a;
  }
  int control_size() const {
    return static_cast<int>(std::lround(total_size() / (1.0 + design.pi)));
  }

  void validate() const {
    if (replications < 1) throw std::invalid_argument("replications must be >= 1");
    if (!(omega_true > 0.0) || !std::isfinite(omega_true)) {
      throw std::invalid_argument("true hazard ratio must be positive");
    }
    if (n_total && *n_total < 1) throw std::invalid_argument("n must be positive");
    if (!(design.rate_r > 0.0)) throw std::invalid_argument("rate must be positive");
    if (!(design.followup_f >= 0.0)) {
      throw std::invalid_argument("follow-up must be nonnegative");
    }
    if (!(design.pi > 0.0)) throw std::invalid_argument("pi must be positive");
    if (!(design.alpha > 0.0 && design.alpha < 1.0)) {
      throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    if (!(accrual() > 0.0)) throw std::invalid_argument("accrual must be positive");
    WeibullModel(design.s1, design.kappa);
    const int n_a = control_size();
    if (n_a < 1 || total_size() - n_a < 1) {
      throw std::invalid_argument("allocation produces empty arm");
    }
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform on (0, 1) from the top 53 bits; never 0 or 1.
inline double open_uniform(std::mt19937_64& g) {
  return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

inline std::mt19937_64 replicate_engine(std::uint64_t seed,
                                        std::uint64_t index) {
  const std::uint64_t s = detail::splitmix64(seed ^ detail::splitmix64(index));
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

struct Trial {
  Cohort control;
  Cohort experimental;
};

/// Control arm first, then experimental; per subject an entry time and an
/// event time are drawn in that order.
inline Trial generate_trial(const SimulationConfig& cfg,
                            std::uint64_t replicate_index) {
  cfg.validate();
  auto gen = replicate_engine(cfg.seed, replicate_index);
  const double a = cfg.accrual();
  const double end = a + cfg.design.followup_f;
  const int n = cfg.total_size();
  const int n_a = cfg.control_size();
  const WeibullModel law_a(cfg.design.s1, cfg.design.kappa);
  const WeibullModel law_b = law_a.scaled(cfg.omega_true);

  auto draw = [&](const WeibullModel& law, int count, Group g) {
    std::vector<SubjectRecord> recs;
    recs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const double entry = a * detail::open_uniform(gen);
      const double t = law.sample(detail::open_uniform(gen));
      const double c = end - entry;
      recs.push_back({std::min(t, c), t <= c, g});
    }
    return Cohort(std::move(recs));
  };
  Trial trial;
  trial.control = draw(law_a, n_a, Group::A);
  trial.experimental = draw(law_b, n - n_a, Group::B);
  return trial;
}

struct ReplicateOutcome {
  // Statistic values; NaN when the test was degenerate or not selected.
  double z_new = std::nan("");
  double z_oslr = std::nan("");
  double z_two_sample = std::nan("");
  double m_hat = std::nan("");
  double variance_new = std::nan("");
  double variance_oslr = std::nan("");
  bool reject_new = false;
  bool reject_oslr = false;
  bool reject_two_sample = false;
  bool degenerate_new = false;
  bool degenerate_oslr = false;
  bool degenerate_two_sample = false;
};

inline ReplicateOutcome run_replicate(const SimulationConfig& cfg,
                                      std::uint64_t index) {
  const auto trial = generate_trial(cfg, index);
  const double alpha = cfg.design.alpha;
  ReplicateOutcome out;
  if (cfg.tests.new_test) {
    try {
      const auto r = new_test(trial.control, trial.experimental, alpha);
      if (r.variance < *r.variance_oslr) {
        throw std::logic_error("variance dominance violated");
      }
      out.z_new = r.statistic;
      out.m_hat = r.m_hat;
      out.variance_new = r.variance;
      out.variance_oslr = *r.variance_oslr;
      out.reject_new = r.reject;
    } catch (const DegenerateDataError&) {
      out.degenerate_new = true;
    }
  }
  if (cfg.tests.oslr) {
    try {
      const auto r = classical_oslr(nelson_aalen(trial.control),
                                    trial.experimental, alpha);
      out.z_oslr = r.statistic;
      out.reject_oslr = r.reject;
    } catch (const DegenerateDataError&) {
      out.degenerate_oslr = true;
    }
  }
  if (cfg.tests.two_sample) {
    try {
      const auto r = two_sample_logrank(trial.control, trial.experimental, alpha);
      out.z_two_sample = r.statistic;
      out.reject_two_sample = r.reject;
    } catch (const DegenerateDataError&) {
      out.degenerate_two_sample = true;
    }
  }
  return out;
}

/// All replicate outcomes in index order, computed on `cfg.threads` workers.
inline std::vector<ReplicateOutcome> run_replicates(const SimulationConfig& cfg) {
  cfg.validate();
  const auto reps = static_cast<std::size_t>(cfg.replications);
  std::vector<ReplicateOutcome> out(reps);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(reps)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < reps && !failed; i = next++) {
        out[i] = run_replicate(cfg, i);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct TestSummary {
  bool enabled = false;
  int rejections = 0;
  int degenerate = 0;
  int replications = 0;
  double rate = 0.0;
  double mc_se = 0.0;
};

struct SimulationReport {
  TestSummary new_test;
  TestSummary oslr;
  TestSummary two_sample;
  int replications = 0;
  std::uint64_t seed = 0;
  int n_total = 0;
  int n_control = 0;
  int n_experimental = 0;
};

namespace detail {

inline TestSummary summarize(bool enabled, int reps, int rejections,
                             int degenerate) {
  TestSummary s;
  s.enabled = enabled;
  s.replications = reps;
  if (!enabled) return s;
  s.rejections = rejections;
  s.degenerate = degenerate;
  s.rate = static_cast<double>(rejections) / reps;
  s.mc_se = std::sqrt(s.rate * (1.0 - s.rate) / reps);
  return s;
}

}  // namespace detail

inline SimulationReport summarize(const SimulationConfig& cfg,
                                  const std::vector<ReplicateOutcome>& reps) {
  int rn = 0, ro = 0, rl = 0, dn = 0, d_o = 0, dl = 0;
  for (const auto& r : reps) {
    rn += r.reject_new;
    ro += r.reject_oslr;
    rl += r.reject_two_sample;
    dn += r.degenerate_new;
    d_o += r.degenerate_oslr;
    dl += r.degenerate_two_sample;
  }
  const int n = static_cast<int>(reps.size());
  SimulationReport rep;
  rep.new_test = detail::summarize(cfg.tests.new_test, n, rn, dn);
  rep.oslr = detail::summarize(cfg.tests.oslr, n, ro, d_o);
  rep.two_sample = detail::summarize(cfg.tests.two_sample, n, rl, dl);
  rep.replications = n;
  rep.seed = cfg.seed;
  rep.n_total = cfg.total_size();
  rep.n_control = cfg.control_size();
  rep.n_experimental = rep.n_total - rep.n_control;
  return rep;
}

inline SimulationReport rejection_study(const SimulationConfig& cfg) {
  return summarize(cfg, run_replicates(cfg));
}

// ---------------------------------------------------------------------------
// Reproduction of published tables.

enum class TableId { T1, T2, T3, T4 };

struct ReproCell {
  std::string label;      // e.g. "kappa=1 n=1000 pi=1" or "... scenario 1 H0"
  std::string measure;    // alpha_new, alpha_oslr, alpha_logrank, power_new, ...
  int n_total = 0;
  double empirical = 0.0;
  double published = 0.0;
  double mc_se = 0.0;
  double abs_diff() const { return std::fabs(empirical - published); }
};

struct ReproRequest {
  TableId table = TableId::T1;
  // Row filters; empty means all rows.
  std::vector<double> kappas;
  std::vector<double> omega0s;   // T2-T4
  std::vector<int> sizes;        // T1 n
  std::vector<double> pis;       // T1
  bool scenario1 = true;         // T2-T4
  bool scenario2 = false;
  int replications = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

namespace detail {

template <typename T>
bool selected(const std::vector<T>& filter, T v) {
  if (filter.empty()) return true;
  return std::any_of(filter.begin(), filter.end(),
                     [&](T x) { return std::fabs(static_cast<double>(x - v)) < 1e-9; });
}

inline std::string fmt(double x) {
  std::string s = std::to_string(x);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

inline double table_s1(TableId id) {
  switch (id) {
    case TableId::T3: return 0.8;
    case TableId::T4: return 0.2;
    default: return 0.5;
  }
}

}  // namespace detail

/// Rejection rates for the selected cells next to the published values. Each
/// simulated configuration gets its own seed stream derived from req.seed.
inline std::vector<ReproCell> table_repro(const ReproRequest& req) {
  std::vector<ReproCell> cells;
  std::uint64_t stream = 0;
  auto next_seed = [&] { return detail::splitmix64(req.seed + (++stream)); };

  if (req.table == TableId::T1) {
    for (const auto& row : published::type_one_table) {
      if (!detail::selected(req.kappas, row.kappa) ||
          !detail::selected(req.sizes, row.n) ||
          !detail::selected(req.pis, row.pi)) {
        continue;
      }
      SimulationConfig cfg;
      cfg.design.kappa = row.kappa;
      cfg.design.s1 = 0.5;
      cfg.design.pi = row.pi;
      cfg.n_total = row.n;
      cfg.omega_true = 1.0;
      cfg.replications = req.replications;
      cfg.seed = next_seed();
      cfg.threads = req.threads;
      cfg.tests = {true, true, false};
      const auto rep = rejection_study(cfg);
      const std::string label = "kappa=" + detail::fmt(row.kappa) +
                                " n=" + std::to_string(row.n) +
                                " pi=" + detail::fmt(row.pi);
      cells.push_back({label, "alpha_new", row.n, rep.new_test.rate,
                       row.alpha_new, rep.new_test.mc_se});
      cells.push_back({label, "alpha_oslr", row.n, rep.oslr.rate,
                       row.alpha_classical, rep.oslr.mc_se});
    }
    return cells;
  }

  const double s1 = detail::table_s1(req.table);
  for (const auto& row : published::power_table) {
    if (row.s1 != s1 || !detail::selected(req.kappas, row.kappa) ||
        !detail::selected(req.omega0s, row.omega0)) {
      continue;
    }
    TrialDesign planning;
    planning.s1 = s1;
    planning.kappa = row.kappa;
    planning.omega0 = row.omega0;
    planning.pi = 1.0;

    auto run = [&](int n, const std::string& scen, double a_new, double a_lr,
                   double p_new, double p_lr) {
      const std::string label = "kappa=" + detail::fmt(row.kappa) +
                                " omega0=" + detail::fmt(row.omega0) + " " + scen;
      for (const double omega : {1.0, row.omega0}) {
        SimulationConfig cfg;
        cfg.design = planning;
        cfg.n_total = n;
        cfg.omega_true = omega;
        cfg.replications = req.replications;
        cfg.seed = next_seed();
        cfg.threads = req.threads;
        cfg.tests = {true, false, true};
        const auto rep = rejection_study(cfg);
        const bool null = omega == 1.0;
        cells.push_back({label, null ? "alpha_new" : "power_new", n,
                         rep.new_test.rate, null ? a_new : p_new,
                         rep.new_test.mc_se});
        cells.push_back({label, null ? "alpha_logrank" : "power_logrank", n,
                         rep.two_sample.rate, null ? a_lr : p_lr,
                         rep.two_sample.mc_se});
      }
    };
    if (req.scenario1) {
      const int n = schoenfeld_sample_size(planning, 0.8).n_total;
      run(n, "scenario 1", row.alpha_new, row.alpha_logrank, row.power_new,
          row.power_logrank);
    }
    if (req.scenario2) {
      const int n = required_accrual(planning, 0.8).n_total;
      run(n, "scenario 2", row.alpha_new_prime, row.alpha_logrank_prime,
          row.power_new_prime, row.power_logrank_prime);
    }
  }
  return cells;
}

}  // namespace refcurve
