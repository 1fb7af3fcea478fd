#pragma once

// Directed rounding on top of round-to-nearest.
//
// Every helper computes the nearest result, recovers the exact rounding error
// with an error-free transformation (TwoSum for +/-, FMA residual for * and /)
// and steps one ULP outward only if the error points the wrong way. Results
// that are exactly representable therefore come back unchanged. Close to the
// underflow range the residual may itself be inexact, so there we always step.
// The FP environment is never touched.

#include <cmath>
#include <limits>

#include "ilsolve/error.hpp"

namespace ilsolve::rounding {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this magnitude the FMA residual of a product or quotient may underflow.
inline constexpr double kResidualFloor = 0x1p-960;

inline double next_down(double x) { return std::nextafter(x, -kInf); }
inline double next_up(double x) { return std::nextafter(x, kInf); }

inline double checked(double r) {
  if (!std::isfinite(r)) throw OverflowError("floating-point overflow in interval endpoint");
  return r;
}

namespace detail {

// Exact error of s = fl(a + b): a + b = s + err.
inline double two_sum_error(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

// Sign of the exact a*b - fl(a*b); 0 means exact. `tiny` flags the unsafe range.
inline double product_error(double a, double b, double p, bool& tiny) {
  tiny = std::abs(p) < kResidualFloor && a != 0.0 && b != 0.0;
  return std::fma(a, b, -p);
}

}  // namespace detail

inline double add_down(double a, double b) {
  const double s = checked(a + b);
  return detail::two_sum_error(a, b, s) < 0.0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  const double s = checked(a + b);
  return detail::two_sum_error(a, b, s) > 0.0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
  const double p = checked(a * b);
  bool tiny = false;
  const double e = detail::product_error(a, b, p, tiny);
  return (tiny || e < 0.0) ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  const double p = checked(a * b);
  bool tiny = false;
  const double e = detail::product_error(a, b, p, tiny);
  return (tiny || e > 0.0) ? next_up(p) : p;
}

// Divisor must be nonzero; interval division checks that before calling here.
inline double div_down(double a, double b) {
  const double q = checked(a / b);
  if (a == 0.0) return q;
  if (std::abs(q) < kResidualFloor || std::abs(a) < kResidualFloor) return next_down(q);
  // a - q*b is exact; sign of (a/b - q) = sign(r) * sign(b).
  const double r = std::fma(-q, b, a);
  const bool below = (r > 0.0 && b < 0.0) || (r < 0.0 && b > 0.0);
  return below ? next_down(q) : q;
}

inline double div_up(double a, double b) {
  const double q = checked(a / b);
  if (a == 0.0) return q;
  if (std::abs(q) < kResidualFloor || std::abs(a) < kResidualFloor) return next_up(q);
  const double r = std::fma(-q, b, a);
  const bool above = (r > 0.0 && b > 0.0) || (r < 0.0 && b < 0.0);
  return above ? next_up(q) : q;
}

}  // namespace ilsolve::rounding
