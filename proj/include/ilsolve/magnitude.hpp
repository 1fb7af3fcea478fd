#pragma once

// The gamma-parameterized operator generalizing interval Gauss-Seidel, and the
// magnitude method built on it.
//
// For gamma_i in [0, alpha_i] the operator maps an enclosure x of the
// solution set to
//   (b_i - sum_{j != i} a_ij x_j + [gamma_i, -gamma_i] u_i) / (a_ii + gamma_i [-1, 1]).
// The improper term is evaluated as proper endpoint arithmetic: with
//   w = sum_{j != i} rad(a_ij) mag(x_j)   (rounded up)
//   g = gamma_i * u_lower_i               (rounded down)
// the numerator is [lo(b_i) - (w - g), hi(b_i) + (w - g)]. Any lower bound on
// u is admissible in g.

#include <cstddef>

#include "ilsolve/cheap_bounds.hpp"
#include "ilsolve/classic.hpp"
#include "ilsolve/error.hpp"
#include "ilsolve/interval.hpp"
#include "ilsolve/linsys.hpp"
#include "ilsolve/matrix.hpp"
#include "ilsolve/rounding.hpp"
#include "ilsolve/verified_solve.hpp"

namespace ilsolve {

/// Row i of the operator, intersected with x_i.
inline Interval new_operator_row(const CertifiedSystem& sys, const IntervalVector& x, std::size_t i,
                                 double gamma, double u_lower) {
  detail::require_same_size(sys.system(), x);
  if (!(gamma >= 0.0)) throw DomainError("gamma must be nonnegative");
  const auto row = sys.radius().row(i);
  double w = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (j != i) w = rounding::add_up(w, rounding::mul_up(row[j], x[j].mag()));
  const double g = rounding::mul_down(gamma, u_lower);
  const double t = rounding::sub_up(w, g);

  const Interval& bi = sys.b()[i];
  const double num_lo = rounding::sub_down(bi.lo(), t);
  const double num_hi = rounding::add_up(bi.hi(), t);
  if (num_lo > num_hi) throw EmptyIntersectionError("operator numerator is empty; gamma exceeds alpha?");

  const Interval& aii = sys.A()(i, i);
  const double den_lo = rounding::sub_down(aii.lo(), gamma);
  if (!(den_lo > 0.0)) throw DomainError("operator denominator is not positive");
  const Interval denom(den_lo, rounding::add_up(aii.hi(), gamma));

  // The gamma = 0 image (b_i + w[-1,1]) / a_ii is an enclosure as well and
  // shares w. On [-u, u] both meet the far endpoint u_i exactly, but rounded
  // they can miss each other there by a few ulps; keep the intersection.
  const Interval plain = Interval(rounding::sub_down(bi.lo(), w), rounding::add_up(bi.hi(), w)) / aii;
  const Interval image = detail::intersect_or_throw(Interval(num_lo, num_hi) / denom, plain);
  return detail::intersect_or_throw(image, x[i]);
}

/// All rows of the operator on x.
inline IntervalVector apply_new_operator(const CertifiedSystem& sys, const IntervalVector& x,
                                         const RealVector& gamma, const RealVector& u_lower) {
  detail::require_dims(gamma.size() == sys.size() && u_lower.size() == sys.size(), "apply_new_operator");
  IntervalVector out(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) out[i] = new_operator_row(sys, x, i, gamma[i], u_lower[i]);
  return out;
}

/// One operator pass on [-u_hi, u_hi] with the given bounds.
inline IntervalVector magnitude_enclosure(const CertifiedSystem& sys, const UDBounds& ud) {
  return apply_new_operator(sys, magnitude_box(ud.u_enc), ud.gamma, lower(ud.u_enc));
}

/// The magnitude method: verified u, lower bound on d (cheap O(n^2)
/// bound or verified diagonal of <A>^-1), then one operator pass.
inline IntervalVector magnitude_enclosure(const CertifiedSystem& sys, BoundMode mode = BoundMode::Cheap) {
  return magnitude_enclosure(sys, assemble_ud(sys, mode));
}

/// The magnitude method with gamma = 0; skips the bound on d and reproduces
/// the Gauss-Seidel limit.
inline IntervalVector magnitude_enclosure_gamma0(const CertifiedSystem& sys) {
  const IntervalVector u = enclose_u(sys);
  const RealVector zero(sys.size(), 0.0);
  return apply_new_operator(sys, magnitude_box(u), zero, zero);
}

/// Lower bound on u used in the shrink term of the operator.
enum class ShrinkBound {
  Verified,  // lower endpoints of the verified enclosure of u
  Cheap,     // truncated Neumann-series bound, O(n^2)
};

struct HybridOptions {
  GaussSeidelOptions gauss_seidel{};
  BoundMode mode = BoundMode::Cheap;
  ShrinkBound shrink = ShrinkBound::Verified;
};

struct HybridResult {
  IterationResult gauss_seidel;
  IntervalVector refined;
  UDBounds ud;
};

/// Gauss-Seidel for `gs_iters` steps, then one pass of the operator.
inline HybridResult gs_then_operator(const CertifiedSystem& sys, std::size_t gs_iters,
                                     HybridOptions opts = {}) {
  opts.gauss_seidel.stop.max_iter = gs_iters;
  HybridResult out;
  out.ud = assemble_ud(sys, opts.mode);
  const Sweep sweep = opts.gauss_seidel.sweep;
  const IntervalVector x0 = opts.gauss_seidel.init == InitialBox::Magnitude ? magnitude_box(out.ud.u_enc)
                                                                            : norm_box(sys);
  out.gauss_seidel = iterate(
      sys.system(),
      [sweep](const IntervalLinearSystem& s, const IntervalVector& x) { return gauss_seidel_step(s, x, sweep); },
      x0, opts.gauss_seidel.stop);
  const RealVector u_lower =
      opts.shrink == ShrinkBound::Verified ? lower(out.ud.u_enc) : cheap_lower_bound_u(sys.system());
  out.refined = apply_new_operator(sys, out.gauss_seidel.enclosure, out.ud.gamma, u_lower);
  return out;
}

}  // namespace ilsolve
