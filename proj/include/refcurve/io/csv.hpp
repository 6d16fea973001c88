#pragma once

// Survival records from comma-separated text. A header row is required;
// columns are located by name and unknown columns are ignored.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "refcurve/survival_core.hpp"

namespace refcurve::io {

struct CsvOptions {
  std::string time_column = "time";
  std::string status_column = "status";
  std::string group_column = "group";
  // Observed times are divided by this, e.g. 365.25 for days to years.
  double time_divisor = 1.0;
  // Status codes counted as events. With the default {"1"} the status must
  // be 0 or 1; with a custom set every other code is a censoring.
  std::vector<std::string> event_values{"1"};
  // Keep only rows whose column equals the value.
  std::optional<std::pair<std::string, std::string>> filter;
};

struct InputTable {
  std::vector<SubjectRecord> rows;
  bool has_group = false;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(b, e - b + 1));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') {
    out = out.substr(1, out.size() - 2);
  }
  return out;
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      cur.push_back(ch);
    } else if (ch == ',' && !quoted) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline std::optional<double> parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) return std::nullopt;
  return v;
}

inline std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

}  // namespace detail

inline InputTable read_table(std::istream& in, const CsvOptions& opt,
                             const std::string& source = "<input>") {
  if (!(opt.time_divisor > 0.0)) {
    throw std::invalid_argument("time divisor must be positive");
  }
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (detail::trim(line).empty()) continue;
    header = detail::split_fields(line);
    break;
  }
  if (header.empty()) throw std::invalid_argument(source + ": missing header row");

  auto column = [&](const std::string& name) -> std::optional<std::size_t> {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto time_col = column(opt.time_column);
  const auto status_col = column(opt.status_column);
  if (!time_col || !status_col) {
    throw std::invalid_argument(source + ": header must contain columns '" +
                                opt.time_column + "' and '" +
                                opt.status_column + "'");
  }
  const auto group_col = column(opt.group_column);
  std::optional<std::size_t> filter_col;
  if (opt.filter) {
    filter_col = column(opt.filter->first);
    if (!filter_col) {
      throw std::invalid_argument(source + ": filter column '" +
                                  opt.filter->first + "' not in header");
    }
  }
  const bool binary_status =
      opt.event_values.size() == 1 && opt.event_values.front() == "1";

  InputTable table;
  table.has_group = group_col.has_value();
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto f = detail::split_fields(line);
    if (f.size() != header.size()) {
      throw std::invalid_argument(detail::where(source, line_no) + "expected " +
                                  std::to_string(header.size()) +
                                  " fields, found " + std::to_string(f.size()));
    }
    if (filter_col && f[*filter_col] != opt.filter->second) continue;

    const auto t = detail::parse_double(f[*time_col]);
    if (!t || !std::isfinite(*t) || *t < 0.0) {
      throw std::invalid_argument(detail::where(source, line_no) +
                                  "invalid time '" + f[*time_col] + "'");
    }
    const std::string& st = f[*status_col];
    const bool is_event = std::find(opt.event_values.begin(),
                                    opt.event_values.end(),
                                    st) != opt.event_values.end();
    if (binary_status && !is_event && st != "0") {
      throw std::invalid_argument(detail::where(source, line_no) +
                                  "status must be 0 or 1, got '" + st + "'");
    }
    if (!binary_status && !detail::parse_double(st)) {
      throw std::invalid_argument(detail::where(source, line_no) +
                                  "invalid status '" + st + "'");
    }
    Group g = Group::A;
    if (group_col) {
      const std::string& gv = f[*group_col];
      if (gv == "A") {
        g = Group::A;
      } else if (gv == "B") {
        g = Group::B;
      } else {
        throw std::invalid_argument(detail::where(source, line_no) +
                                    "group must be A or B, got '" + gv + "'");
      }
    }
    table.rows.push_back({*t / opt.time_divisor, is_event, g});
  }
  return table;
}

inline InputTable read_table_file(const std::string& path, const CsvOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_table(in, opt, path);
}

/// Rows of one group, or all rows.
inline Cohort cohort_of(const InputTable& table,
                        std::optional<Group> group = std::nullopt) {
  std::vector<SubjectRecord> recs;
  for (const auto& r : table.rows) {
    if (!group || r.group == *group) recs.push_back(r);
  }
  return Cohort(std::move(recs));
}

}  // namespace refcurve::io
