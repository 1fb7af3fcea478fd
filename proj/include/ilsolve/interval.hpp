#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>

#include "ilsolve/error.hpp"
#include "ilsolve/rounding.hpp"

namespace ilsolve {

/// Closed interval [lo, hi] with finite machine endpoints, lo <= hi.
///
/// Improper intervals are never materialized; expressions that would need one
/// are rewritten as endpoint arithmetic by the caller. All arithmetic is
/// outward rounded, so the result always contains the exact image set.
class Interval {
 public:
  constexpr Interval() = default;

  explicit Interval(double point) : Interval(point, point) {}

  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw DomainError("interval endpoints must be finite");
    if (!(lo <= hi)) throw DomainError("interval lower endpoint exceeds upper endpoint");
  }

  /// [-r, r]; r must be nonnegative.
  static Interval symmetric(double r) { return Interval(-r, r); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  /// Nearest machine number to the exact midpoint.
  double mid() const { return std::midpoint(lo_, hi_); }

  /// Upper bound on the radius such that [mid()-rad(), mid()+rad()] contains *this.
  double rad() const {
    const double m = mid();
    return std::max(rounding::sub_up(m, lo_), rounding::sub_up(hi_, m));
  }

  /// max(|lo|, |hi|).
  double mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }

  /// min{|a| : a in *this}; zero when the interval straddles 0.
  double mig() const {
    if (lo_ <= 0.0 && 0.0 <= hi_) return 0.0;
    return std::min(std::abs(lo_), std::abs(hi_));
  }

  double width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return contains(0.0); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline bool contains(const Interval& a, double x) { return a.contains(x); }

/// a subset of b.
inline bool subset(const Interval& a, const Interval& b) {
  return b.lo() <= a.lo() && a.hi() <= b.hi();
}

/// std::nullopt is the empty set.
inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval(rounding::add_down(a.lo(), b.lo()), rounding::add_up(a.hi(), b.hi()));
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return Interval(rounding::sub_down(a.lo(), b.hi()), rounding::sub_up(a.hi(), b.lo()));
}

inline Interval operator*(double s, const Interval& a) {
  if (s >= 0.0)
    return Interval(rounding::mul_down(s, a.lo()), rounding::mul_up(s, a.hi()));
  return Interval(rounding::mul_down(s, a.hi()), rounding::mul_up(s, a.lo()));
}

inline Interval operator*(const Interval& a, double s) { return s * a; }

inline Interval operator*(const Interval& a, const Interval& b) {
  using namespace rounding;
  const double lo = std::min({mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()),
                              mul_down(a.hi(), b.lo()), mul_down(a.hi(), b.hi())});
  const double hi = std::max({mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()),
                              mul_up(a.hi(), b.lo()), mul_up(a.hi(), b.hi())});
  return Interval(lo, hi);
}

inline Interval operator/(const Interval& a, const Interval& b) {
  using namespace rounding;
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const double lo = std::min({div_down(a.lo(), b.lo()), div_down(a.lo(), b.hi()),
                              div_down(a.hi(), b.lo()), div_down(a.hi(), b.hi())});
  const double hi = std::max({div_up(a.lo(), b.lo()), div_up(a.lo(), b.hi()),
                              div_up(a.hi(), b.lo()), div_up(a.hi(), b.hi())});
  return Interval(lo, hi);
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }

inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << '[' << a.lo() << ", " << a.hi() << ']';
}

}  // namespace ilsolve
