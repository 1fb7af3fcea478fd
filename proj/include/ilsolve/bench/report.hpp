#pragma once

// Report sinks for benchmark rows: aligned text tables laid out like the
// published timing and tightness tables, CSV, and JSON.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ilsolve/bench/suite.hpp"

namespace ilsolve::bench {

inline std::string format_number(double v, int precision = 6) {
  if (std::isnan(v)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

/// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline void write_csv(std::ostream& out, const std::vector<RowStats>& rows) {
  out << "n,delta,method,mean_time_s,mean_tightness,failures\r\n";
  for (const RowStats& r : rows) {
    out << r.n << ',' << csv_field(format_number(r.delta, 17)) << ',' << csv_field(std::string(label(r.method)))
        << ',' << csv_field(format_number(r.mean_time, 6)) << ',' << csv_field(format_number(r.mean_tightness, 12))
        << ',' << r.failures << "\r\n";
  }
}

inline nlohmann::json rows_to_json(const std::vector<RowStats>& rows) {
  nlohmann::json out = nlohmann::json::array();
  auto num = [](double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); };
  for (const RowStats& r : rows)
    out.push_back({{"n", r.n},
                   {"delta", r.delta},
                   {"method", label(r.method)},
                   {"instances", r.instances},
                   {"mean_time_s", num(r.mean_time)},
                   {"mean_tightness", num(r.mean_tightness)},
                   {"failures", r.failures}});
  return out;
}

namespace detail {

inline void pad(std::ostream& out, const std::string& s, std::size_t width) {
  out << std::string(width > s.size() ? width - s.size() : 0, ' ') << s;
}

// One table: a row per (n, delta) in first-seen order, a column per method.
template <class Cell>
void write_table(std::ostream& out, const std::string& title, const std::vector<RowStats>& rows, Cell cell) {
  std::vector<Method> methods;
  std::vector<std::pair<std::size_t, double>> keys;
  std::map<std::pair<std::pair<std::size_t, double>, Method>, const RowStats*> lookup;
  for (const RowStats& r : rows) {
    const auto key = std::make_pair(r.n, r.delta);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
    lookup[{key, r.method}] = &r;
  }

  std::vector<std::string> header = {"n", "delta"};
  for (Method m : methods) header.emplace_back(label(m));
  std::vector<std::vector<std::string>> body;
  for (const auto& key : keys) {
    std::vector<std::string> line = {std::to_string(key.first), format_number(key.second)};
    for (Method m : methods) {
      auto it = lookup.find({key, m});
      line.push_back(it == lookup.end() ? "" : cell(*it->second));
    }
    body.push_back(std::move(line));
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& line : body) width[c] = std::max(width[c], line[c].size());
  }
  out << title << '\n';
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out << "  ";
    pad(out, header[c], width[c]);
  }
  out << '\n';
  for (const auto& line : body) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      pad(out, line[c], width[c]);
    }
    out << '\n';
  }
}

}  // namespace detail

inline void write_text(std::ostream& out, const std::vector<RowStats>& rows) {
  out << "# random instances: mid(A), mid(b) uniform on [-10,10], rad(A) = delta, b a point vector\n";
  if (rows.empty()) {
    out << "(no rows)\n";
    return;
  }
  detail::write_table(out, "Mean computational time [s]", rows,
                      [](const RowStats& r) { return format_number(r.mean_time, 4); });
  out << '\n';
  detail::write_table(out, "Mean tightness (sum rad x / sum rad hull)", rows,
                      [](const RowStats& r) { return format_number(r.mean_tightness, 6); });
  std::size_t failures = 0;
  for (const RowStats& r : rows) failures += r.failures;
  if (failures > 0) {
    out << '\n';
    detail::write_table(out, "Failed instances", rows, [](const RowStats& r) { return std::to_string(r.failures); });
  }
}

}  // namespace ilsolve::bench
