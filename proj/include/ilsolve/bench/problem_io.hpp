#pragma once

// Problem files:
//   {"n": 2, "A": [[["-4","-2"], ["8","10"]], ...], "b": [["-6","-4"], ...]}
// Endpoints are decimal strings. A lower endpoint that is not exactly
// representable is rounded toward -inf, an upper one toward +inf. Writing
// emits the exact decimal expansion of every endpoint, so files round-trip
// without widening.

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include <json.hpp>

#include "ilsolve/error.hpp"
#include "ilsolve/linsys.hpp"
#include "ilsolve/rounding.hpp"

namespace ilsolve::io {

enum class Direction { Down, Up };

namespace detail {

// value = (negative ? -1 : 1) * 0.digits * 10^exponent, digits without
// leading or trailing zeros; zero has empty digits.
struct Decimal {
  bool negative = false;
  std::string digits;
  long exponent = 0;
};

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Strict decimal grammar: [+-]? digits [. digits]? ([eE] [+-]? digits)?
inline Decimal parse_decimal(std::string_view s) {
  Decimal d;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) d.negative = s[i++] == '-';
  std::string mantissa;
  long point = -1;
  bool any = false;
  for (; i < s.size() && (is_digit(s[i]) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (point >= 0) throw ParseError("malformed number: '" + std::string(s) + "'");
      point = static_cast<long>(mantissa.size());
    } else {
      mantissa.push_back(s[i]);
      any = true;
    }
  }
  if (!any) throw ParseError("malformed number: '" + std::string(s) + "'");
  if (point < 0) point = static_cast<long>(mantissa.size());
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    const auto* first = s.data() + i;
    if (i < s.size() && s[i] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), exp10);
    if (ec != std::errc() || ptr == first) throw ParseError("malformed exponent: '" + std::string(s) + "'");
    i = static_cast<std::size_t>(ptr - s.data());
  }
  if (i != s.size()) throw ParseError("trailing characters in number: '" + std::string(s) + "'");

  std::size_t lead = 0;
  while (lead < mantissa.size() && mantissa[lead] == '0') ++lead;
  std::size_t end = mantissa.size();
  while (end > lead && mantissa[end - 1] == '0') --end;
  d.digits = mantissa.substr(lead, end - lead);
  d.exponent = point - static_cast<long>(lead) + exp10;
  return d;
}

// Sign of a - b.
inline int compare(const Decimal& a, const Decimal& b) {
  const int sa = a.digits.empty() ? 0 : (a.negative ? -1 : 1);
  const int sb = b.digits.empty() ? 0 : (b.negative ? -1 : 1);
  if (sa != sb || sa == 0) return sa < sb ? -1 : (sa > sb ? 1 : 0);
  int mag = 0;
  if (a.exponent != b.exponent) mag = a.exponent < b.exponent ? -1 : 1;
  else mag = a.digits.compare(b.digits) < 0 ? -1 : (a.digits == b.digits ? 0 : 1);
  return sa * mag;
}

}  // namespace detail

/// Exact decimal expansion of a finite double (glibc prints exact digits).
inline std::string exact_decimal(double x) {
  char buf[832];
  std::snprintf(buf, sizeof buf, "%.767e", x);
  std::string s(buf);
  const auto e = s.find('e');
  std::string mant = s.substr(0, e);
  const int exp10 = std::stoi(s.substr(e + 1));
  while (!mant.empty() && mant.back() == '0') mant.pop_back();
  if (!mant.empty() && mant.back() == '.') mant.pop_back();
  return exp10 == 0 ? mant : mant + "e" + std::to_string(exp10);
}

/// Parses a decimal endpoint and rounds it in the given direction when it is
/// not exactly representable.
inline double parse_endpoint(std::string_view text, Direction dir) {
  const detail::Decimal exact = detail::parse_decimal(text);
  double value = 0.0;
  const char* first = text.data();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range || !std::isfinite(value))
    throw ParseError("endpoint out of range: '" + std::string(text) + "'");
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("malformed endpoint: '" + std::string(text) + "'");
  const int c = detail::compare(detail::parse_decimal(exact_decimal(value)), exact);
  if (dir == Direction::Down && c > 0) return rounding::next_down(value);
  if (dir == Direction::Up && c < 0) return rounding::next_up(value);
  return value;
}

inline Interval interval_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw ParseError("interval must be a pair of decimal strings");
  const double lo = parse_endpoint(j[0].get<std::string>(), Direction::Down);
  const double hi = parse_endpoint(j[1].get<std::string>(), Direction::Up);
  if (lo > hi) throw ParseError("interval lower endpoint exceeds upper endpoint");
  return Interval(lo, hi);
}

inline nlohmann::json to_json(const Interval& x) {
  return nlohmann::json::array({exact_decimal(x.lo()), exact_decimal(x.hi())});
}

inline nlohmann::json to_json(const IntervalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Interval& x : v) out.push_back(to_json(x));
  return out;
}

inline nlohmann::json to_json(const IntervalLinearSystem& sys) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < sys.size(); ++j) row.push_back(to_json(sys.A()(i, j)));
    a.push_back(std::move(row));
  }
  return {{"n", sys.size()}, {"A", std::move(a)}, {"b", to_json(sys.b())}};
}

/// Raw system from a problem document. Throws ParseError on schema violations.
inline IntervalLinearSystem system_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("A") || !j.contains("b"))
    throw ParseError("problem must be an object with keys n, A, b");
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw ParseError("n must be a positive integer");
  const std::size_t n = j["n"].get<std::size_t>();
  const auto& ja = j["A"];
  const auto& jb = j["b"];
  if (!ja.is_array() || ja.size() != n || !jb.is_array() || jb.size() != n)
    throw ParseError("A must have n rows and b must have n entries");
  IntervalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!ja[i].is_array() || ja[i].size() != n) throw ParseError("row " + std::to_string(i) + " of A must have n entries");
    for (std::size_t k = 0; k < n; ++k) a(i, k) = interval_from_json(ja[i][k]);
  }
  IntervalVector b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = interval_from_json(jb[i]);
  return IntervalLinearSystem(std::move(a), std::move(b));
}

inline IntervalLinearSystem read_problem(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return system_from_json(j);
}

inline void write_problem(std::ostream& out, const IntervalLinearSystem& sys) {
  out << to_json(sys).dump(2) << '\n';
}

}  // namespace ilsolve::io
