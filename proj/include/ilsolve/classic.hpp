#pragma once

// Reference enclosure methods for midpoint-identity systems: Krawczyk and
// interval Gauss-Seidel iterations, their closed-form limits, and the
// Ning-Kearfott formula for the interval hull.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "ilsolve/error.hpp"
#include "ilsolve/interval.hpp"
#include "ilsolve/linsys.hpp"
#include "ilsolve/matrix.hpp"
#include "ilsolve/rounding.hpp"
#include "ilsolve/verified_solve.hpp"

namespace ilsolve {

enum class Sweep {
  Jacobi,      // every row reads the previous iterate
  Sequential,  // rows reuse entries already tightened in the same sweep
};

enum class InitialBox {
  Magnitude,  // [-u_hi, u_hi] from the verified enclosure of u
  NormBound,  // [-beta, beta], beta = ||mag b||_inf / (1 - ||rad A||_inf)
};

struct StoppingRule {
  std::size_t max_iter = 100;
  double tol = 1e-12;
};

struct IterationResult {
  IntervalVector enclosure;
  std::size_t iterations = 0;  // steps that still moved some endpoint
  bool converged = false;
};

namespace detail {

inline Interval intersect_or_throw(const Interval& a, const Interval& b) {
  auto c = intersect(a, b);
  if (!c) throw EmptyIntersectionError("operator image misses the current enclosure");
  return *c;
}

inline bool moved(const IntervalVector& before, const IntervalVector& after, double tol) {
  for (std::size_t i = 0; i < before.size(); ++i) {
    const double dl = std::abs(after[i].lo() - before[i].lo());
    const double dh = std::abs(after[i].hi() - before[i].hi());
    if (dl >= tol * (1.0 + std::abs(before[i].lo()))) return true;
    if (dh >= tol * (1.0 + std::abs(before[i].hi()))) return true;
  }
  return false;
}

inline void require_same_size(const IntervalLinearSystem& sys, const IntervalVector& x) {
  require_dims(x.size() == sys.size(), "enclosure");
}

}  // namespace detail

/// (b + (I - A) x) intersected with x.
inline IntervalVector krawczyk_step(const IntervalLinearSystem& sys, const IntervalVector& x) {
  detail::require_same_size(sys, x);
  const std::size_t n = sys.size();
  IntervalVector next(n);
  for (std::size_t i = 0; i < n; ++i) {
    Interval acc = sys.b()[i];
    for (std::size_t j = 0; j < n; ++j)
      acc += (Interval(i == j ? 1.0 : 0.0) - sys.A()(i, j)) * x[j];
    next[i] = detail::intersect_or_throw(acc, x[i]);
  }
  return next;
}

/// Rowwise (b_i - sum_{j != i} a_ij x_j) / a_ii, intersected with x_i.
/// Throws DomainError if a diagonal entry contains zero.
inline IntervalVector gauss_seidel_step(const IntervalLinearSystem& sys, const IntervalVector& x,
                                        Sweep sweep = Sweep::Jacobi) {
  detail::require_same_size(sys, x);
  const std::size_t n = sys.size();
  IntervalVector next = x;
  const IntervalVector& src = sweep == Sweep::Jacobi ? x : next;
  for (std::size_t i = 0; i < n; ++i) {
    Interval acc = sys.b()[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) acc -= sys.A()(i, j) * src[j];
    next[i] = detail::intersect_or_throw(acc / sys.A()(i, i), x[i]);
  }
  return next;
}

/// Applies `step` until no endpoint moves by tol * (1 + |endpoint|) or
/// max_iter steps were taken. Each step intersects with its input, so the
/// iterates are nested and every one of them encloses the solution set.
template <class Step>
IterationResult iterate(const IntervalLinearSystem& sys, Step&& step, IntervalVector x0,
                        StoppingRule stop = {}) {
  IterationResult result{std::move(x0), 0, false};
  for (std::size_t k = 0; k < stop.max_iter; ++k) {
    IntervalVector next = step(sys, result.enclosure);
    const bool changed = detail::moved(result.enclosure, next, stop.tol);
    result.enclosure = std::move(next);
    if (!changed) {
      result.converged = true;
      break;
    }
    ++result.iterations;
  }
  return result;
}

inline IntervalVector magnitude_box(const IntervalVector& u_enc) {
  IntervalVector x(u_enc.size());
  for (std::size_t i = 0; i < u_enc.size(); ++i) x[i] = Interval::symmetric(u_enc[i].hi());
  return x;
}

/// [-beta, beta] with beta = ||mag b||_inf / (1 - ||rad A||_inf), rounded up.
/// Throws VerificationFailedError when ||rad A||_inf >= 1.
inline IntervalVector norm_box(const CertifiedSystem& sys) {
  const std::size_t n = sys.size();
  double rad_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double r : sys.radius().row(i)) s = rounding::add_up(s, r);
    rad_norm = std::max(rad_norm, s);
  }
  if (!(rad_norm < 1.0)) throw VerificationFailedError("||rad A||_inf >= 1, no norm-based initial box");
  double b_norm = 0.0;
  for (const Interval& bi : sys.b()) b_norm = std::max(b_norm, bi.mag());
  const double beta = rounding::div_up(b_norm, rounding::sub_down(1.0, rad_norm));
  return IntervalVector(n, Interval::symmetric(beta));
}

inline IntervalVector initial_box(const CertifiedSystem& sys, InitialBox kind) {
  return kind == InitialBox::NormBound ? norm_box(sys) : magnitude_box(enclose_u(sys));
}

struct GaussSeidelOptions {
  Sweep sweep = Sweep::Jacobi;
  InitialBox init = InitialBox::Magnitude;
  StoppingRule stop{};
};

inline IterationResult gauss_seidel_iterative(const CertifiedSystem& sys,
                                              const GaussSeidelOptions& opts = {}) {
  const Sweep sweep = opts.sweep;
  return iterate(
      sys.system(),
      [sweep](const IntervalLinearSystem& s, const IntervalVector& x) {
        return gauss_seidel_step(s, x, sweep);
      },
      initial_box(sys, opts.init), opts.stop);
}

inline IterationResult krawczyk_iterative(const CertifiedSystem& sys, InitialBox init = InitialBox::Magnitude,
                                          StoppingRule stop = {}) {
  return iterate(
      sys.system(), [](const IntervalLinearSystem& s, const IntervalVector& x) { return krawczyk_step(s, x); },
      initial_box(sys, init), stop);
}

namespace detail {

// sum_{j in row i} rad(a_ij) * u_hi_j, rounded up; the diagonal term only
// when `with_diagonal`.
inline double widening(const CertifiedSystem& sys, const IntervalVector& u_enc, std::size_t i,
                       bool with_diagonal) {
  double w = 0.0;
  const auto row = sys.radius().row(i);
  for (std::size_t j = 0; j < row.size(); ++j)
    if (with_diagonal || j != i) w = rounding::add_up(w, rounding::mul_up(row[j], u_enc[j].hi()));
  return w;
}

inline Interval widen(const Interval& b, double t) {
  return Interval(rounding::sub_down(b.lo(), t), rounding::add_up(b.hi(), t));
}

}  // namespace detail

/// Limit of the Gauss-Seidel iteration: (b_i + (sum_{j != i} rad a_ij u_j)[-1,1]) / a_ii.
inline IntervalVector gs_limit(const CertifiedSystem& sys, const IntervalVector& u_enc) {
  const std::size_t n = sys.size();
  IntervalVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = detail::widen(sys.b()[i], detail::widening(sys, u_enc, i, false)) / sys.A()(i, i);
  return x;
}

inline IntervalVector gs_limit(const CertifiedSystem& sys, const UDBounds& ud) { return gs_limit(sys, ud.u_enc); }

/// Limit of the Krawczyk iteration: b + rad(A) u [-1, 1].
inline IntervalVector krawczyk_limit(const CertifiedSystem& sys, const IntervalVector& u_enc) {
  const std::size_t n = sys.size();
  IntervalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = detail::widen(sys.b()[i], detail::widening(sys, u_enc, i, true));
  return x;
}

inline IntervalVector krawczyk_limit(const CertifiedSystem& sys, const UDBounds& ud) {
  return krawczyk_limit(sys, ud.u_enc);
}

/// Outer enclosure of the interval hull
///   (b_i + (u_i/d_i - mag b_i)[-1,1]) / (a_ii + alpha_i[-1,1]),
///   alpha_i = <a_ii> - 1/d_i.
/// Needs two-sided d bounds (UDSource::VerifiedExact). The expression grows
/// monotonically with u_i/d_i and with alpha_i, so evaluating at the upper
/// bounds of both encloses every admissible value.
inline IntervalVector ning_kearfott_hull(const CertifiedSystem& sys, const UDBounds& ud) {
  if (ud.source != UDSource::VerifiedExact || !ud.d_enc)
    throw VerificationFailedError("hull formula needs a verified two-sided enclosure of d");
  const std::size_t n = sys.size();
  IntervalVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Interval& bi = sys.b()[i];
    const Interval& di = (*ud.d_enc)[i];
    const double d_lo = ud.d_lo[i];
    const double t = std::max(rounding::sub_up(rounding::div_up(ud.u_enc[i].hi(), d_lo), bi.mag()), 0.0);
    const double alpha = std::max(
        rounding::sub_up(sys.comparison()(i, i), rounding::div_down(1.0, std::max(di.hi(), d_lo))), 0.0);
    const Interval& aii = sys.A()(i, i);
    const Interval denom(rounding::sub_down(aii.lo(), alpha), rounding::add_up(aii.hi(), alpha));
    if (!(denom.lo() > 0.0)) throw VerificationFailedError("hull denominator is not positive");
    // Mixing u_hi/d_lo with d_hi pushes the far endpoint past u_hi by about
    // u_i times the relative width of d; |x_i| <= u_i holds for every solution.
    const double u_hi = ud.u_enc[i].hi();
    x[i] = detail::intersect_or_throw(detail::widen(bi, t) / denom, Interval(-u_hi, u_hi));
  }
  return x;
}

}  // namespace ilsolve
