#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "ilsolve/error.hpp"
#include "ilsolve/interval.hpp"
#include "ilsolve/lu.hpp"
#include "ilsolve/matrix.hpp"
#include "ilsolve/rounding.hpp"

namespace ilsolve {

enum class SystemForm {
  Raw,               // arbitrary square interval system
  MidpointIdentity,  // mid(A) = I exactly, off-diagonal entries centered at 0
};

/// Square interval linear system A x = b.
class IntervalLinearSystem {
 public:
  IntervalLinearSystem(IntervalMatrix a, IntervalVector b, SystemForm form = SystemForm::Raw)
      : a_(std::move(a)), b_(std::move(b)), form_(form) {
    detail::require_square(a_.rows(), a_.cols(), "IntervalLinearSystem");
    detail::require_dims(b_.size() == a_.rows(), "IntervalLinearSystem");
    if (form_ == SystemForm::MidpointIdentity) check_midpoint_identity();
  }

  /// Builds [I - radius, I + radius] x = b. Off-diagonal entries are exactly
  /// [-r, r]. Diagonal radii are rounded up to the 2^-52 grid so that both
  /// 1 - r and 1 + r are machine numbers and the midpoint stays exactly 1.
  static IntervalLinearSystem midpoint_identity(const RealMatrix& radius, IntervalVector b) {
    detail::require_square(radius.rows(), radius.cols(), "midpoint_identity");
    const std::size_t n = radius.rows();
    IntervalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double r = radius(i, j);
        if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("radius must be finite and nonnegative");
        if (i != j) {
          a(i, j) = Interval::symmetric(r);
        } else {
          const double g = grid_radius(r);
          a(i, j) = Interval(1.0 - g, 1.0 + g);
        }
      }
    return IntervalLinearSystem(std::move(a), std::move(b), SystemForm::MidpointIdentity);
  }

  const IntervalMatrix& A() const { return a_; }
  const IntervalVector& b() const { return b_; }
  SystemForm form() const { return form_; }
  std::size_t size() const { return b_.size(); }

  /// Exact radius of entry (i, j). Only meaningful for MidpointIdentity systems.
  double radius(std::size_t i, std::size_t j) const {
    return i == j ? a_(i, i).hi() - 1.0 : a_(i, j).hi();
  }

 private:
  static double grid_radius(double r) {
    if (r < 1.0) return std::ceil(r * 0x1p52) * 0x1p-52;
    if (r >= 0x1p52) throw OverflowError("diagonal radius too large for a midpoint-identity system");
    return std::ceil(r);
  }

  void check_midpoint_identity() const {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      for (std::size_t j = 0; j < a_.cols(); ++j) {
        const Interval& x = a_(i, j);
        const double c = i == j ? 1.0 : 0.0;
        const double up = rounding::sub_down(x.hi(), c);
        const double down = rounding::sub_down(c, x.lo());
        const bool exact = up == rounding::sub_up(x.hi(), c) && down == rounding::sub_up(c, x.lo());
        if (!exact || up != down)
          throw DomainError("midpoint-identity system must have mid(A) = I exactly");
      }
  }

  IntervalMatrix a_;
  IntervalVector b_;
  SystemForm form_;
};

/// Floating-point inverse of mid(A). Throws SingularMidpointError when a pivot
/// falls below n * eps * ||mid A||_inf.
inline RealMatrix approx_mid_inverse(const IntervalMatrix& a) {
  detail::require_square(a.rows(), a.cols(), "approx_mid_inverse");
  auto lu = LuFactorization::factor(mid(a));
  if (!lu) throw SingularMidpointError("midpoint matrix is numerically singular");
  return lu->inverse();
}

/// Preconditions with R ~ mid(A)^-1 and relaxes to
/// [I - mag(I - R A), I + mag(I - R A)] x = R b.
/// The solution set of the result contains that of `sys`.
inline IntervalLinearSystem precondition_relax(const IntervalLinearSystem& sys) {
  const RealMatrix r = approx_mid_inverse(sys.A());
  const IntervalMatrix ra = matmul(r, sys.A());
  const std::size_t n = sys.size();
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Interval dev = Interval(i == j ? 1.0 : 0.0) - ra(i, j);
      m(i, j) = dev.mag();
    }
  return IntervalLinearSystem::midpoint_identity(m, matvec(r, sys.b()));
}

/// Witness v > 0 with <A> v > 0, checked with outward rounding. When verified,
/// <A> = I - rad A is a nonsingular M-matrix and hence rho(rad A) < 1.
struct RegularityCertificate {
  RealVector witness;
  bool verified = false;
};

inline RegularityCertificate certify_regular(const IntervalLinearSystem& sys) {
  if (sys.form() != SystemForm::MidpointIdentity)
    throw DomainError("certify_regular requires a midpoint-identity system");
  const std::size_t n = sys.size();
  const RealMatrix comp = comparison_matrix(sys.A());
  RegularityCertificate cert;

  auto lu = LuFactorization::factor(comp);
  if (!lu) return cert;
  cert.witness = lu->solve(RealVector(n, 1.0));
  for (double v : cert.witness)
    if (!(v > 0.0) || !std::isfinite(v)) return cert;

  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) off = rounding::add_up(off, rounding::mul_up(-comp(i, j), cert.witness[j]));
    const double row = rounding::sub_down(rounding::mul_down(comp(i, i), cert.witness[i]), off);
    if (!(row > 0.0)) return cert;
  }
  cert.verified = true;
  return cert;
}

/// A midpoint-identity system together with a verified regularity
/// certificate. Every enclosure method takes one of these, so none of them can
/// run on an uncertified system.
class CertifiedSystem {
 public:
  /// Throws NotCertifiedError when the certificate is inconclusive.
  static CertifiedSystem certify(IntervalLinearSystem sys) {
    RegularityCertificate cert = certify_regular(sys);
    if (!cert.verified)
      throw NotCertifiedError("could not verify rho(rad A) < 1 for the preconditioned system");
    return CertifiedSystem(std::move(sys), std::move(cert));
  }

  const IntervalLinearSystem& system() const { return sys_; }
  const RegularityCertificate& certificate() const { return cert_; }
  const IntervalMatrix& A() const { return sys_.A(); }
  const IntervalVector& b() const { return sys_.b(); }
  std::size_t size() const { return sys_.size(); }

  /// rad A (exact).
  const RealMatrix& radius() const { return radius_; }
  /// <A> = I - rad A (exact).
  const RealMatrix& comparison() const { return comparison_; }

 private:
  CertifiedSystem(IntervalLinearSystem sys, RegularityCertificate cert)
      : sys_(std::move(sys)), cert_(std::move(cert)) {
    const std::size_t n = sys_.size();
    radius_ = RealMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) radius_(i, j) = sys_.radius(i, j);
    comparison_ = comparison_matrix(sys_.A());
  }

  IntervalLinearSystem sys_;
  RegularityCertificate cert_;
  RealMatrix radius_;
  RealMatrix comparison_;
};

/// Raw system -> preconditioned, relaxed and certified.
inline CertifiedSystem prepare(const IntervalLinearSystem& raw) {
  return CertifiedSystem::certify(precondition_relax(raw));
}

}  // namespace ilsolve
