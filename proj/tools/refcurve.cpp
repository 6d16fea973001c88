// refcurve: one-sample log-rank testing against an estimated reference curve.
//
//   refcurve test      --control A.csv --experimental B.csv [--mode all]
//   refcurve design    --kappa 1 --omega0 0.5 --method new
//   refcurve inflate   --historical hist.csv --a 2 --f 2 [--sweep pi --grid 0.01:1:0.01]
//   refcurve simulate  --kappa 1 --n 1000 --reps 4000 --seed 1 [--table T1]
//
// Exit codes: 0 success, 2 input error, 3 numerical or degenerate data.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "refcurve/design.hpp"
#include "refcurve/errors.hpp"
#include "refcurve/inflation.hpp"
#include "refcurve/io/csv.hpp"
#include "refcurve/io/json.hpp"
#include "refcurve/simulation.hpp"
#include "refcurve/test_engine.hpp"

namespace {

using nlohmann::json;
using namespace refcurve;

constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct Output {
  std::string path;
  std::string format = "json";

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
  }
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--out", out.path, "Write the result to this file");
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

struct CsvFlags {
  std::string time_column = "time";
  std::string status_column = "status";
  std::string group_column = "group";
  std::string time_unit = "years";
  std::vector<std::string> event_values;
  std::string filter;

  io::CsvOptions options() const {
    io::CsvOptions o;
    o.time_column = time_column;
    o.status_column = status_column;
    o.group_column = group_column;
    if (time_unit == "days") {
      o.time_divisor = 365.25;
    } else if (time_unit == "months") {
      o.time_divisor = 12.0;
    } else if (time_unit == "weeks") {
      o.time_divisor = 365.25 / 7.0;
    }
    if (!event_values.empty()) o.event_values = event_values;
    if (!filter.empty()) {
      const auto eq = filter.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("--filter expects COLUMN=VALUE");
      }
      o.filter = std::make_pair(filter.substr(0, eq), filter.substr(eq + 1));
    }
    return o;
  }
};

void add_csv_flags(CLI::App* cmd, CsvFlags& f) {
  cmd->add_option("--time-column", f.time_column, "Column holding observed times");
  cmd->add_option("--status-column", f.status_column, "Column holding event status");
  cmd->add_option("--group-column", f.group_column, "Column holding the arm (A/B)");
  cmd->add_option("--time-unit", f.time_unit, "Unit of the time column")
      ->check(CLI::IsMember({"years", "months", "weeks", "days"}));
  cmd->add_option("--event-value", f.event_values,
                  "Status code counted as an event (repeatable); other codes "
                  "are then censorings");
  cmd->add_option("--filter", f.filter, "Keep only rows with COLUMN=VALUE");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_number(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

unsigned worker_count(std::optional<unsigned> requested) {
  unsigned n = requested.value_or(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("REFCURVE_THREADS")) {
    try {
      const long v = std::stol(cap);
      if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw std::invalid_argument("REFCURVE_THREADS must be a positive integer");
    }
  }
  return std::max(1u, n);
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(step > 0.0) || hi < lo) {
      throw std::invalid_argument("--grid expects START:STOP:STEP or a comma list");
    }
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) out.push_back(lo + static_cast<double>(k) * step);
    return out;
  }
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto v = io::detail::parse_double(io::detail::trim(item));
    if (!v) throw std::invalid_argument("--grid: invalid value '" + item + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw std::invalid_argument("--grid is empty");
  return out;
}

// ---------------------------------------------------------------------------

struct TestCmd {
  std::string control;
  std::string experimental;
  std::string data;
  std::string mode = "all";
  double alpha = 0.05;
  std::optional<double> ref_s1;
  std::optional<double> ref_kappa;
  CsvFlags csv;
  Output out;

  void run() const {
    const auto opt = csv.options();
    Cohort a, b;
    if (!data.empty()) {
      const auto t = io::read_table_file(data, opt);
      if (!t.has_group) {
        throw std::invalid_argument("'" + data + "' has no '" +
                                    opt.group_column + "' column");
      }
      a = io::cohort_of(t, Group::A);
      b = io::cohort_of(t, Group::B);
    } else {
      if (experimental.empty()) {
        throw std::invalid_argument("--experimental (or --data) is required");
      }
      b = io::cohort_of(io::read_table_file(experimental, opt));
      if (!control.empty()) a = io::cohort_of(io::read_table_file(control, opt));
    }
    const bool parametric = ref_s1.has_value() || ref_kappa.has_value();
    if (parametric && !(ref_s1 && ref_kappa)) {
      throw std::invalid_argument("--ref-s1 and --ref-kappa go together");
    }
    auto need_control = [&] {
      if (control.empty() && data.empty()) {
        throw std::invalid_argument("--control (or --data) is required for mode " + mode);
      }
    };

    json j;
    auto run_oslr = [&] {
      if (parametric) {
        const WeibullModel ref(*ref_s1, *ref_kappa);
        b.require_nonempty();
        auto step = discretize_reference(
            [&](double t) { return ref.cum_hazard(t); }, b.sorted_times());
        return classical_oslr(step, b, alpha);
      }
      need_control();
      a.require_nonempty();
      return classical_oslr(nelson_aalen(a), b, alpha);
    };
    if (mode == "new") {
      need_control();
      j = new_test(a, b, alpha);
    } else if (mode == "oslr") {
      j = run_oslr();
    } else if (mode == "two_sample") {
      need_control();
      j = two_sample_logrank(a, b, alpha);
    } else {
      need_control();
      j["new"] = new_test(a, b, alpha);
      j["oslr"] = run_oslr();
      j["two_sample"] = two_sample_logrank(a, b, alpha);
    }
    if (out.format == "csv") {
      std::ostringstream s;
      s << "test,statistic,p_value,reject\n";
      auto row = [&](const std::string& name, const json& r) {
        s << name << "," << csv_number(r["statistic"].get<double>()) << ","
          << csv_number(r["p_value"].get<double>()) << ","
          << (r["reject"].get<bool>() ? 1 : 0) << "\n";
      };
      if (mode == "all") {
        for (const char* k : {"new", "oslr", "two_sample"}) row(k, j[k]);
      } else {
        row(mode, j);
      }
      out.write(s.str());
    } else {
      out.write(dump(j));
    }
  }
};

// ---------------------------------------------------------------------------

struct DesignFlags {
  TrialDesign d;

  void add(CLI::App* cmd, bool with_omega0) {
    cmd->add_option("--kappa", d.kappa, "Weibull shape of the control arm");
    cmd->add_option("--s1", d.s1, "One-year survival of the control arm");
    cmd->add_option("--f", d.followup_f, "Follow-up after accrual (years)");
    cmd->add_option("--rate", d.rate_r, "Accrual rate (patients per year)");
    cmd->add_option("--pi", d.pi, "Allocation ratio n_B / n_A");
    cmd->add_option("--alpha", d.alpha, "Two-sided significance level");
    if (with_omega0) {
      cmd->add_option("--omega0", d.omega0, "Planning hazard ratio");
    }
  }
};

struct DesignCmd {
  DesignFlags flags;
  double target = 0.8;
  std::string method = "new";
  std::optional<double> accrual;
  std::string curve;
  Output out;

  void run() const {
    const auto& d = flags.d;
    if (!curve.empty()) {
      std::ostringstream s;
      s << "accrual,n,power\n";
      for (double a : parse_grid(curve)) {
        TrialDesign at = d;
        at.accrual_a = a;
        s << csv_number(a) << "," << csv_number(at.n()) << ","
          << csv_number(power(at)) << "\n";
      }
      out.write(s.str());
      return;
    }
    DesignResult r;
    if (accrual) {
      if (d.rate_r * *accrual < 2.0) {
        throw std::invalid_argument("design: rate * accrual must be at least 2");
      }
      TrialDesign at = d;
      at.accrual_a = *accrual;
      const auto ms = mu_sigma(at);
      r.accrual_a = *accrual;
      r.n_total = static_cast<int>(std::lround(at.n()));
      r.n_control = static_cast<int>(std::lround(r.n_total / (1.0 + d.pi)));
      r.n_experimental = r.n_total - r.n_control;
      r.mu = ms.mu;
      r.sigma = ms.sigma;
      r.achieved_power = power(at);
    } else if (method == "schoenfeld") {
      r = schoenfeld_sample_size(d, target);
    } else {
      r = required_accrual(d, target);
    }
    json j = r;
    j["method"] = accrual ? "power" : method;
    j["design"] = d;
    if (!accrual) j["design"].erase("accrual");
    if (out.format == "csv") {
      std::ostringstream s;
      s << "method,n_total,n_control,n_experimental,accrual,achieved_power\n"
        << j["method"].get<std::string>() << "," << r.n_total << ","
        << r.n_control << "," << r.n_experimental << ","
        << csv_number(r.accrual_a) << "," << csv_number(r.achieved_power) << "\n";
      out.write(s.str());
    } else {
      out.write(dump(j));
    }
  }
};

// ---------------------------------------------------------------------------

struct InflateCmd {
  std::string historical;
  double a = 2.0;
  double f = 2.0;
  double pi = 1.0;
  double alpha = 0.05;
  std::string sweep_axis;
  std::string grid;
  CsvFlags csv;
  Output out;
  bool format_given = false;

  void run() const {
    const auto table = io::read_table_file(historical, csv.options());
    InflationInput in;
    in.historical = io::cohort_of(table, table.has_group ? std::optional{Group::A}
                                                         : std::nullopt);
    in.accrual_a = a;
    in.followup_f = f;
    in.pi = pi;
    in.alpha = alpha;

    if (sweep_axis.empty()) {
      if (!grid.empty()) throw std::invalid_argument("--grid needs --sweep");
      SweepRow row;
      row.var_oslr = expected_var_oslr(in);
      row.var_new = expected_var_new(in);
      row.level = inflated_level(in);
      json j = {{"level", row.level},
                {"var_oslr", row.var_oslr},
                {"var_new", row.var_new},
                {"alpha", alpha},
                {"accrual", a},
                {"followup", f},
                {"pi", pi},
                {"historical_n", in.historical.size()},
                {"historical_events", in.historical.event_count()}};
      if (out.format == "csv") {
        out.write("level,var_oslr,var_new\n" + csv_number(row.level) + "," +
                  csv_number(row.var_oslr) + "," + csv_number(row.var_new) + "\n");
      } else {
        out.write(dump(j));
      }
      return;
    }
    if (grid.empty()) throw std::invalid_argument("--sweep needs --grid");
    const SweepAxis axis = sweep_axis == "pi"         ? SweepAxis::pi
                           : sweep_axis == "followup" ? SweepAxis::followup
                                                      : SweepAxis::accrual;
    const auto rows = sweep(in, axis, parse_grid(grid));
    if (format_given && out.format == "json") {
      out.write(dump(json{{"axis", sweep_axis}, {"rows", rows}}));
      return;
    }
    std::ostringstream s;
    s << sweep_axis << ",level,var_oslr,var_new,valid,error\n";
    for (const auto& r : rows) {
      s << csv_number(r.value) << ",";
      if (r.valid) {
        s << csv_number(r.level) << "," << csv_number(r.var_oslr) << ","
          << csv_number(r.var_new) << ",1,\n";
      } else {
        s << ",,,0,\"" << r.error << "\"\n";
      }
    }
    out.write(s.str());
  }
};

// ---------------------------------------------------------------------------

struct SimulateCmd {
  DesignFlags flags;
  double omega = 1.0;
  std::optional<int> n;
  std::optional<double> accrual;
  int reps = 1000;
  std::uint64_t seed = 0;
  std::string tests = "new,oslr,two_sample";
  std::optional<unsigned> threads;
  std::string table;
  std::vector<double> kappas;
  std::vector<double> omega0s;
  std::vector<int> sizes;
  std::vector<double> pis;
  std::string scenario = "1";
  Output out;

  TestSelection selection() const {
    TestSelection s{false, false, false};
    std::istringstream in(tests);
    std::string t;
    while (std::getline(in, t, ',')) {
      t = io::detail::trim(t);
      if (t == "new") {
        s.new_test = true;
      } else if (t == "oslr") {
        s.oslr = true;
      } else if (t == "two_sample") {
        s.two_sample = true;
      } else {
        throw std::invalid_argument("--tests: unknown test '" + t + "'");
      }
    }
    return s;
  }

  void run() const {
    if (!table.empty()) {
      run_table();
      return;
    }
    SimulationConfig cfg;
    cfg.design = flags.d;
    if (accrual) cfg.design.accrual_a = *accrual;
    if (n) cfg.n_total = *n;
    if (!n && !accrual) throw std::invalid_argument("give --n or --accrual");
    cfg.omega_true = omega;
    cfg.replications = reps;
    cfg.seed = seed;
    cfg.tests = selection();
    cfg.threads = worker_count(threads);
    const auto rep = rejection_study(cfg);
    if (out.format == "csv") {
      std::ostringstream s;
      s << "test,rejections,rate,mc_se,degenerate,replications,seed\n";
      auto row = [&](const char* name, const TestSummary& t) {
        if (!t.enabled) return;
        s << name << "," << t.rejections << "," << csv_number(t.rate) << ","
          << csv_number(t.mc_se) << "," << t.degenerate << ","
          << t.replications << "," << seed << "\n";
      };
      row("new", rep.new_test);
      row("oslr", rep.oslr);
      row("two_sample", rep.two_sample);
      out.write(s.str());
    } else {
      json j = rep;
      j["omega"] = omega;
      j["design"] = cfg.design;
      j["design"]["accrual"] = cfg.accrual();
      j["design"].erase("omega0");
      out.write(dump(j));
    }
  }

  void run_table() const {
    ReproRequest req;
    req.table = table == "T1"   ? TableId::T1
                : table == "T2" ? TableId::T2
                : table == "T3" ? TableId::T3
                                : TableId::T4;
    req.kappas = kappas;
    req.omega0s = omega0s;
    req.sizes = sizes;
    req.pis = pis;
    req.scenario1 = scenario == "1" || scenario == "both";
    req.scenario2 = scenario == "2" || scenario == "both";
    req.replications = reps;
    req.seed = seed;
    req.threads = worker_count(threads);
    const auto cells = table_repro(req);
    if (out.format == "csv") {
      std::ostringstream s;
      s << "cell,measure,n,empirical,published,abs_diff,mc_se\n";
      for (const auto& c : cells) {
        s << "\"" << c.label << "\"," << c.measure << "," << c.n_total << ","
          << csv_number(c.empirical) << "," << csv_number(c.published) << ","
          << csv_number(c.abs_diff()) << "," << csv_number(c.mc_se) << "\n";
      }
      out.write(s.str());
    } else {
      out.write(dump(json{{"table", table}, {"replications", reps},
                          {"seed", seed}, {"cells", cells}}));
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-sample log-rank testing against an estimated reference curve"};
  app.require_subcommand(1);

  TestCmd test_cmd;
  auto* t = app.add_subcommand("test", "Run the significance tests on data");
  t->add_option("--control", test_cmd.control, "CSV with the control cohort");
  t->add_option("--experimental", test_cmd.experimental, "CSV with the experimental cohort");
  t->add_option("--data", test_cmd.data, "Single CSV with a group column (A/B)");
  t->add_option("--mode", test_cmd.mode, "Which test to run")
      ->check(CLI::IsMember({"new", "oslr", "two_sample", "all"}));
  t->add_option("--alpha", test_cmd.alpha, "Two-sided significance level");
  t->add_option("--ref-s1", test_cmd.ref_s1,
                "Weibull reference for the classical test: one-year survival");
  t->add_option("--ref-kappa", test_cmd.ref_kappa,
                "Weibull reference for the classical test: shape");
  add_csv_flags(t, test_cmd.csv);
  add_output(t, test_cmd.out);

  DesignCmd design_cmd;
  auto* d = app.add_subcommand("design", "Sample size or power of a planned trial");
  design_cmd.flags.add(d, true);
  d->add_option("--power", design_cmd.target, "Target power");
  d->add_option("--method", design_cmd.method, "Sizing method")
      ->check(CLI::IsMember({"new", "schoenfeld"}));
  d->add_option("--accrual", design_cmd.accrual,
                "Report the power of the new test at this accrual length instead");
  d->add_option("--curve", design_cmd.curve,
                "Power of the new test over accrual lengths START:STOP:STEP (CSV)");
  add_output(d, design_cmd.out);

  InflateCmd inflate_cmd;
  auto* inf = app.add_subcommand("inflate",
                                 "Actual level of the classical test given historical data");
  inf->add_option("--historical", inflate_cmd.historical, "CSV with the historical cohort")
      ->required();
  inf->add_option("--a", inflate_cmd.a, "Accrual length of the planned trial");
  inf->add_option("--f", inflate_cmd.f, "Follow-up of the planned trial");
  inf->add_option("--pi", inflate_cmd.pi, "Allocation ratio");
  inf->add_option("--alpha", inflate_cmd.alpha, "Nominal two-sided level");
  inf->add_option("--sweep", inflate_cmd.sweep_axis, "Parameter to vary")
      ->check(CLI::IsMember({"pi", "followup", "accrual"}));
  inf->add_option("--grid", inflate_cmd.grid, "START:STOP:STEP or comma-separated values");
  add_csv_flags(inf, inflate_cmd.csv);
  add_output(inf, inflate_cmd.out);

  SimulateCmd sim_cmd;
  auto* s = app.add_subcommand("simulate", "Monte Carlo rejection rates");
  sim_cmd.flags.add(s, false);
  s->add_option("--omega", sim_cmd.omega, "True hazard ratio");
  s->add_option("--n", sim_cmd.n, "Total sample size (accrual becomes n / rate)");
  s->add_option("--accrual", sim_cmd.accrual, "Accrual length when --n is not given");
  s->add_option("--reps", sim_cmd.reps, "Replications");
  s->add_option("--seed", sim_cmd.seed, "Random seed")->required();
  s->add_option("--tests", sim_cmd.tests, "Comma list of new, oslr, two_sample");
  s->add_option("--threads", sim_cmd.threads, "Worker threads");
  s->add_option("--table", sim_cmd.table, "Reproduce a published table")
      ->check(CLI::IsMember({"T1", "T2", "T3", "T4"}));
  s->add_option("--kappas", sim_cmd.kappas, "Table rows: shape values")->delimiter(',');
  s->add_option("--omega0s", sim_cmd.omega0s, "Table rows: planning hazard ratios")
      ->delimiter(',');
  s->add_option("--sizes", sim_cmd.sizes, "Table rows: total sizes")->delimiter(',');
  s->add_option("--pis", sim_cmd.pis, "Table rows: allocation ratios")->delimiter(',');
  s->add_option("--scenario", sim_cmd.scenario, "Sizing scenario for T2-T4")
      ->check(CLI::IsMember({"1", "2", "both"}));
  add_output(s, sim_cmd.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (t->parsed()) {
      test_cmd.run();
    } else if (d->parsed()) {
      design_cmd.run();
    } else if (inf->parsed()) {
      inflate_cmd.format_given = inf->count("--format") > 0;
      inflate_cmd.run();
    } else if (s->parsed()) {
      sim_cmd.run();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DegenerateDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
