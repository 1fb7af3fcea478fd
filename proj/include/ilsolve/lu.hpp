#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "ilsolve/matrix.hpp"

namespace ilsolve {

inline double norm_inf(const RealMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (double v : a.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

inline RealVector multiply(const RealMatrix& a, const RealVector& x) {
  detail::require_dims(a.cols() == x.size(), "multiply");
  RealVector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

/// Plain floating-point LU factorization with partial pivoting. Nothing here
/// is verified; callers that need rigor check the results in interval
/// arithmetic afterwards.
class LuFactorization {
 public:
  /// std::nullopt when some pivot satisfies |pivot| < n * eps * ||a||_inf
  /// (or is exactly zero).
  static std::optional<LuFactorization> factor(const RealMatrix& a) {
    detail::require_square(a.rows(), a.cols(), "LU factorization");
    const std::size_t n = a.rows();
    const double tol =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * norm_inf(a);
    LuFactorization lu;
    lu.lu_ = a;
    lu.perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) lu.perm_[i] = i;
    RealMatrix& m = lu.lu_;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
      const double pivot = m(p, k);
      if (pivot == 0.0 || std::abs(pivot) < tol || !std::isfinite(pivot)) return std::nullopt;
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
        std::swap(lu.perm_[k], lu.perm_[p]);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        const double f = m(i, k) / pivot;
        m(i, k) = f;
        if (f == 0.0) continue;
        for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
      }
    }
    return lu;
  }

  std::size_t size() const { return lu_.rows(); }

  RealVector solve(const RealVector& b) const {
    const std::size_t n = size();
    detail::require_dims(b.size() == n, "LU solve");
    RealVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
      x[i] = s / lu_(i, i);
    }
    return x;
  }

  RealMatrix inverse() const {
    const std::size_t n = size();
    RealMatrix inv(n, n);
    RealVector e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = 1.0;
      const RealVector col = solve(e);
      e[j] = 0.0;
      for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
  }

 private:
  RealMatrix lu_;
  std::vector<std::size_t> perm_;
};

}  // namespace ilsolve
