#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ilsolve/cheap_bounds.hpp"
#include "ilsolve/error.hpp"
#include "ilsolve/linsys.hpp"
#include "ilsolve/lu.hpp"
#include "ilsolve/matrix.hpp"
#include "ilsolve/rounding.hpp"

namespace ilsolve {

/// Verified solver for point systems M x = c.
///
/// With an approximate inverse S and G = I - S M (enclosed in interval
/// arithmetic, ||G||_inf = g < 1), for x~ = S c and z an enclosure of
/// S (c - M x~):
///   x - x~ = S (c - M x~) + G (x - x~),  ||x - x~||_inf <= ||z||_inf / (1 - g),
/// so x_i lies in x~_i + z_i + (sum_j |G_ij|) * beta * [-1, 1].
class VerifiedLinearSolver {
 public:
  /// Throws VerificationFailedError if M is numerically singular or the
  /// contraction ||I - S M||_inf < 1 cannot be established.
  explicit VerifiedLinearSolver(RealMatrix m) : m_(std::move(m)) {
    detail::require_square(m_.rows(), m_.cols(), "VerifiedLinearSolver");
    const std::size_t n = m_.rows();
    auto lu = LuFactorization::factor(m_);
    if (!lu) throw VerificationFailedError("matrix is numerically singular");
    s_ = lu->inverse();

    g_row_sums_ = RealVector(n, 0.0);
    std::vector<double> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(lo.begin(), lo.end(), 0.0);
      std::fill(hi.begin(), hi.end(), 0.0);
      lo[i] = hi[i] = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double sik = s_(i, k);
        if (sik == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const double mkj = m_(k, j);
          lo[j] = rounding::sub_down(lo[j], rounding::mul_up(sik, mkj));
          hi[j] = rounding::sub_up(hi[j], rounding::mul_down(sik, mkj));
        }
      }
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        sum = rounding::add_up(sum, std::max(std::abs(lo[j]), std::abs(hi[j])));
      g_row_sums_[i] = sum;
      contraction_ = std::max(contraction_, sum);
    }
    if (!(contraction_ < 1.0))
      throw VerificationFailedError("could not establish ||I - S M||_inf < 1");
  }

  std::size_t size() const { return m_.rows(); }

  /// Verified upper bound on ||I - S M||_inf.
  double contraction_bound() const { return contraction_; }

  IntervalVector solve(const RealVector& c) const {
    const std::size_t n = size();
    detail::require_dims(c.size() == n, "verified solve");
    const RealVector approx = multiply(s_, c);

    IntervalVector residual(n);
    for (std::size_t i = 0; i < n; ++i) {
      double lo = c[i], hi = c[i];
      for (std::size_t j = 0; j < n; ++j) {
        lo = rounding::sub_down(lo, rounding::mul_up(m_(i, j), approx[j]));
        hi = rounding::sub_up(hi, rounding::mul_down(m_(i, j), approx[j]));
      }
      residual[i] = Interval(lo, hi);
    }
    const IntervalVector correction = matvec(s_, residual);

    double zmax = 0.0;
    for (const Interval& z : correction) zmax = std::max(zmax, z.mag());
    const double beta = rounding::div_up(zmax, rounding::sub_down(1.0, contraction_));

    IntervalVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double spread = rounding::mul_up(g_row_sums_[i], beta);
      x[i] = Interval(approx[i]) + correction[i] + Interval::symmetric(spread);
    }
    return x;
  }

  /// Enclosure of diag(M^-1) via n unit-vector solves, O(n^3).
  IntervalVector inverse_diagonal() const {
    const std::size_t n = size();
    IntervalVector d(n);
    RealVector e(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = 1.0;
      d[i] = solve(e)[i];
      e[i] = 0.0;
    }
    return d;
  }

 private:
  RealMatrix m_;
  RealMatrix s_;
  RealVector g_row_sums_;
  double contraction_ = 0.0;
};

inline IntervalVector verified_point_solve(const RealMatrix& m, const RealVector& c) {
  return VerifiedLinearSolver(m).solve(c);
}

inline IntervalVector verified_inverse_diag(const RealMatrix& m) {
  return VerifiedLinearSolver(m).inverse_diagonal();
}

enum class BoundMode { Cheap, Exact };
enum class UDSource { CheapBound, VerifiedExact };

/// Bounds on u = <A>^-1 mag(b) and d = diag(<A>^-1), plus the operator
/// parameter gamma_i = <a_ii> - 1/d_lo_i (rounded down, clamped at 0).
struct UDBounds {
  IntervalVector u_enc;
  RealVector d_lo;
  std::optional<IntervalVector> d_enc;  // only for VerifiedExact
  RealVector gamma;
  UDSource source = UDSource::CheapBound;
};

/// Verified enclosure of u. Since <A>^-1 >= I entrywise, u >= mag(b), and the
/// lower endpoints are raised accordingly.
inline IntervalVector enclose_u(const CertifiedSystem& sys, const VerifiedLinearSolver& solver) {
  const RealVector mb = mag(sys.b());
  IntervalVector u = solver.solve(mb);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].hi() < mb[i]) throw VerificationFailedError("u enclosure below mag(b)");
    u[i] = Interval(std::max(u[i].lo(), mb[i]), u[i].hi());
  }
  return u;
}

inline IntervalVector enclose_u(const CertifiedSystem& sys) {
  return enclose_u(sys, VerifiedLinearSolver(sys.comparison()));
}

inline RealVector gamma_from_d(const CertifiedSystem& sys, const RealVector& d_lo) {
  RealVector gamma(d_lo.size());
  for (std::size_t i = 0; i < d_lo.size(); ++i) {
    const double g = rounding::sub_down(sys.comparison()(i, i), rounding::div_up(1.0, d_lo[i]));
    gamma[i] = std::max(g, 0.0);
  }
  return gamma;
}

inline UDBounds assemble_ud(const CertifiedSystem& sys, BoundMode mode) {
  UDBounds ud;
  if (mode == BoundMode::Exact) {
    VerifiedLinearSolver solver(sys.comparison());
    ud.u_enc = enclose_u(sys, solver);
    ud.d_enc = solver.inverse_diagonal();
    // d_i = sum_k ((rad A)^k)_ii >= 1.
    ud.d_lo = lower(*ud.d_enc);
    for (double& v : ud.d_lo) v = std::max(v, 1.0);
    ud.source = UDSource::VerifiedExact;
  } else {
    ud.u_enc = enclose_u(sys);
    ud.d_lo = cheap_lower_bound_d(sys.system());
    ud.source = UDSource::CheapBound;
  }
  ud.gamma = gamma_from_d(sys, ud.d_lo);
  return ud;
}

}  // namespace ilsolve
