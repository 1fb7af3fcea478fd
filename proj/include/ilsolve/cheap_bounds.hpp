#pragma once

// O(n^2) lower bounds on u = <A>^-1 mag(b) and d = diag(<A>^-1) for
// midpoint-identity systems, from truncating the Neumann series of
// (I - rad A)^-1.

#include <cstddef>

#include "ilsolve/error.hpp"
#include "ilsolve/linsys.hpp"
#include "ilsolve/rounding.hpp"

namespace ilsolve {

/// Counts scalar floating-point operations. Pass one in to audit cost.
struct OpCounter {
  std::size_t ops = 0;
  void add(std::size_t k) { ops += k; }
};

namespace detail {

inline void require_midpoint_identity(const IntervalLinearSystem& sys, const char* what) {
  if (sys.form() != SystemForm::MidpointIdentity)
    throw DomainError(std::string(what) + " requires a midpoint-identity system");
}

// y = rad(A) * x rounded down, x >= 0.
inline RealVector radius_times_down(const IntervalLinearSystem& sys, const RealVector& x,
                                    OpCounter* counter) {
  const std::size_t n = sys.size();
  std::size_t ops = 0;
  RealVector y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s = rounding::add_down(s, rounding::mul_down(sys.radius(i, j), x[j]));
      ops += i == j ? 3 : 2;  // the diagonal radius costs a subtraction
    }
    y[i] = s;
  }
  if (counter) counter->add(ops);
  return y;
}

}  // namespace detail

/// u >= mag(b) + rad A (mag(b) + rad A mag(b)), evaluated rounding down.
inline RealVector cheap_lower_bound_u(const IntervalLinearSystem& sys, OpCounter* counter = nullptr) {
  detail::require_midpoint_identity(sys, "cheap_lower_bound_u");
  const std::size_t n = sys.size();
  const RealVector mb = mag(sys.b());
  RealVector inner = detail::radius_times_down(sys, mb, counter);
  for (std::size_t i = 0; i < n; ++i) inner[i] = rounding::add_down(mb[i], inner[i]);
  RealVector u = detail::radius_times_down(sys, inner, counter);
  for (std::size_t i = 0; i < n; ++i) u[i] = rounding::add_down(mb[i], u[i]);
  if (counter) counter->add(2 * n);  // the two vector additions
  return u;
}

/// d_i >= upper(a_ii) / (1 - ((rad A)^2)_ii), numerator exact, denominator
/// rounded up, quotient rounded down. Throws DegenerateBoundError when the
/// denominator is not positive (uncertified input).
inline RealVector cheap_lower_bound_d(const IntervalLinearSystem& sys, OpCounter* counter = nullptr) {
  detail::require_midpoint_identity(sys, "cheap_lower_bound_d");
  const std::size_t n = sys.size();
  std::size_t ops = 0;
  RealVector d(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      sq = rounding::add_down(sq, rounding::mul_down(sys.radius(i, j), sys.radius(j, i)));
      ops += i == j ? 4 : 2;
    }
    const double denom = rounding::sub_up(1.0, sq);
    if (!(denom > 0.0)) throw DegenerateBoundError("1 - ((rad A)^2)_ii is not positive");
    d[i] = rounding::div_down(sys.A()(i, i).hi(), denom);
    ops += 2;
  }
  if (counter) counter->add(ops);
  return d;
}

}  // namespace ilsolve
