#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ilsolve/error.hpp"
#include "ilsolve/interval.hpp"

namespace ilsolve {

/// Fixed-length dense vector. The length is set at construction.
template <class T>
class Vector {
 public:
  using value_type = T;

  Vector() = default;
  explicit Vector(std::size_t n, const T& fill = T{}) : data_(n, fill) {}
  Vector(std::initializer_list<T> init) : data_(init) {}
  explicit Vector(std::vector<T> data) : data_(std::move(data)) {}

  std::size_t size() const { return data_.size(); }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  std::span<const T> view() const { return data_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<T> data_;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n)
    requires std::is_arithmetic_v<T>
  {
    Matrix m(n, n, T{0});
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealVector = Vector<double>;
using RealMatrix = Matrix<double>;
using IntervalVector = Vector<Interval>;
using IntervalMatrix = Matrix<Interval>;

namespace detail {

inline void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) throw NonSquareError(std::string(what) + ": matrix is not square");
}

inline void require_dims(bool ok, const char* what) {
  if (!ok) throw DimensionError(std::string(what) + ": dimension mismatch");
}

template <class Out, class In, class F>
Matrix<Out> map(const Matrix<In>& a, F f) {
  Matrix<Out> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j));
  return out;
}

template <class Out, class In, class F>
Vector<Out> map(const Vector<In>& a, F f) {
  Vector<Out> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i]);
  return out;
}

}  // namespace detail

inline RealMatrix mid(const IntervalMatrix& a) {
  return detail::map<double>(a, [](const Interval& x) { return x.mid(); });
}
inline RealMatrix rad(const IntervalMatrix& a) {
  return detail::map<double>(a, [](const Interval& x) { return x.rad(); });
}
inline RealMatrix mag(const IntervalMatrix& a) {
  return detail::map<double>(a, [](const Interval& x) { return x.mag(); });
}
inline RealVector mid(const IntervalVector& a) {
  return detail::map<double>(a, [](const Interval& x) { return x.mid(); });
}
inline RealVector rad(const IntervalVector& a) {
  return detail::map<double>(a, [](const Interval& x) { return x.rad(); });
}
inline RealVector mag(const IntervalVector& a) {
  return detail::map<double>(a, [](const Interval& x) { return x.mag(); });
}
inline RealVector lower(const IntervalVector& a) {
  return detail::map<double>(a, [](const Interval& x) { return x.lo(); });
}
inline RealVector upper(const IntervalVector& a) {
  return detail::map<double>(a, [](const Interval& x) { return x.hi(); });
}

inline IntervalVector to_interval(const RealVector& v) {
  return detail::map<Interval>(v, [](double x) { return Interval(x); });
}
inline IntervalMatrix to_interval(const RealMatrix& m) {
  return detail::map<Interval>(m, [](double x) { return Interval(x); });
}

/// Comparison matrix: mignitude on the diagonal, -magnitude elsewhere.
/// Both are exact functions of the endpoints, so no rounding is involved.
inline RealMatrix comparison_matrix(const IntervalMatrix& a) {
  detail::require_square(a.rows(), a.cols(), "comparison_matrix");
  RealMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = i == j ? a(i, j).mig() : -a(i, j).mag();
  return c;
}

/// Interval dot product of row i of `a` with `x`, outward rounded.
template <class Entry>
Interval dot_row(const Matrix<Entry>& a, std::size_t i, const IntervalVector& x) {
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Interval p = a(i, j) * x[j];
    lo = rounding::add_down(lo, p.lo());
    hi = rounding::add_up(hi, p.hi());
  }
  return Interval(lo, hi);
}

template <class Entry>
IntervalVector matvec(const Matrix<Entry>& a, const IntervalVector& x) {
  detail::require_dims(a.cols() == x.size(), "matvec");
  IntervalVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot_row(a, i, x);
  return y;
}

template <class Entry>
IntervalMatrix matmul(const Matrix<Entry>& a, const IntervalMatrix& b) {
  detail::require_dims(a.cols() == b.rows(), "matmul");
  const std::size_t n = a.rows(), m = b.cols(), k = a.cols();
  Matrix<double> lo(n, m, 0.0), hi(n, m, 0.0);
  // i-k-j order keeps the inner loop on contiguous rows of b.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const Entry& ail = a(i, l);
      for (std::size_t j = 0; j < m; ++j) {
        const Interval p = ail * b(l, j);
        lo(i, j) = rounding::add_down(lo(i, j), p.lo());
        hi(i, j) = rounding::add_up(hi(i, j), p.hi());
      }
    }
  IntervalMatrix c(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = Interval(lo(i, j), hi(i, j));
  return c;
}

/// Componentwise intersection; std::nullopt when any component is empty.
inline std::optional<IntervalVector> intersect(const IntervalVector& a, const IntervalVector& b) {
  detail::require_dims(a.size() == b.size(), "intersect");
  IntervalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = intersect(a[i], b[i]);
    if (!c) return std::nullopt;
    out[i] = *c;
  }
  return out;
}

inline bool subset(const IntervalVector& a, const IntervalVector& b) {
  detail::require_dims(a.size() == b.size(), "subset");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!subset(a[i], b[i])) return false;
  return true;
}

inline bool contains(const IntervalVector& a, const RealVector& x) {
  detail::require_dims(a.size() == x.size(), "contains");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].contains(x[i])) return false;
  return true;
}

}  // namespace ilsolve
