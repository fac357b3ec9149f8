#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "ispec/complex_interval.hpp"
#include "ispec/interval.hpp"

namespace ispec {

using PointMatrix = Eigen::MatrixXd;
using ComplexPointMatrix = Eigen::MatrixXcd;

/// Dense row-major matrix of interval-valued entries.
///
/// T is Interval for real interval matrices, ComplexRect or ComplexDisc for
/// complex ones; the entry type fixes the representation of the whole
/// matrix.
template <typename T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if constexpr (std::is_same_v<T, ComplexDisc>) {
        m(i, i) = ComplexDisc(Complex(1.0));
      } else {
        m(i, i) = T(Interval(1.0));
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const T> entries() const { return data_; }
  std::span<T> entries() { return data_; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, std::span<const T> c) {
    if (c.size() != rows_) throw std::invalid_argument("set_column: length");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Removes row i and column j.
  DenseMatrix minor(std::size_t i, std::size_t j) const {
    DenseMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
        if (c == j) continue;
        m(mr, mc++) = (*this)(r, c);
      }
      ++mr;
    }
    return m;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntervalMatrix = DenseMatrix<Interval>;
using RectMatrix = DenseMatrix<ComplexRect>;
using DiscMatrix = DenseMatrix<ComplexDisc>;
using IntervalVector = std::vector<Interval>;
using RectVector = std::vector<ComplexRect>;

template <typename T>
void require_same_shape(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("interval matrix: shape mismatch");
  }
}

template <typename T>
DenseMatrix<T> operator+(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  require_same_shape(a, b);
  DenseMatrix<T> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.entries().size(); ++k) {
    c.entries()[k] = a.entries()[k] + b.entries()[k];
  }
  return c;
}

template <typename T>
DenseMatrix<T> operator-(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  require_same_shape(a, b);
  DenseMatrix<T> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.entries().size(); ++k) {
    c.entries()[k] = a.entries()[k] - b.entries()[k];
  }
  return c;
}

template <typename T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("interval matrix product: shape mismatch");
  }
  DenseMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

template <typename T>
std::vector<T> operator*(const DenseMatrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("interval matrix-vector: shape mismatch");
  }
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc = a(i, 0) * x[0];
    for (std::size_t k = 1; k < a.cols(); ++k) acc = acc + a(i, k) * x[k];
    y[i] = acc;
  }
  return y;
}

// --- real interval matrices ----------------------------------------------

/// Throws std::invalid_argument unless lower <= upper entrywise and finite.
IntervalMatrix from_bounds(const PointMatrix& lower, const PointMatrix& upper);
/// Outward-rounded [mid - rad, mid + rad]; rad must be nonnegative.
IntervalMatrix from_mid_rad(const PointMatrix& mid, const PointMatrix& rad);
IntervalMatrix to_interval(const PointMatrix& p);

PointMatrix lower_matrix(const IntervalMatrix& a);
PointMatrix upper_matrix(const IntervalMatrix& a);
PointMatrix mid_matrix(const IntervalMatrix& a);
/// Entrywise radius, rounded upward.
PointMatrix rad_matrix(const IntervalMatrix& a);
/// Entrywise magnitude.
PointMatrix mag_matrix(const IntervalMatrix& a);

bool contains(const IntervalMatrix& a, const PointMatrix& p);
bool contains(const IntervalMatrix& outer, const IntervalMatrix& inner);
bool is_bounded(const IntervalMatrix& a);

/// Upper bound u >= ||A||_2 for every A in a, via sqrt(||M||_1 ||M||_inf)
/// with M = |a| the entrywise magnitude matrix.
double spectral_norm_ub(const IntervalMatrix& a);
double spectral_norm_ub(const RectMatrix& a);
double spectral_norm_ub(const DiscMatrix& a);

/// Sum of all entrywise radii, rounded to nearest.
double sum_radii(const IntervalMatrix& a);

/// Interval matrix scaled by 1/s for a point s > 0.
IntervalMatrix divide(const IntervalMatrix& a, double s);

/// Symmetric interval matrix: the symmetric members of an interval matrix
/// whose midpoint and radius are both symmetric.
class SymIntervalMatrix {
 public:
  /// Throws std::invalid_argument if a is not square or not symmetric.
  explicit SymIntervalMatrix(IntervalMatrix a);

  const IntervalMatrix& matrix() const { return a_; }
  std::size_t size() const { return a_.rows(); }
  const Interval& operator()(std::size_t i, std::size_t j) const {
    return a_(i, j);
  }

 private:
  IntervalMatrix a_;
};

// --- complex interval matrices -------------------------------------------

RectMatrix to_rect(const IntervalMatrix& a);
RectMatrix to_rect(const ComplexPointMatrix& p);
RectMatrix to_rect(const DiscMatrix& a);
DiscMatrix to_disc(const RectMatrix& a);
/// Conjugate transpose.
RectMatrix adjoint(const RectMatrix& a);
/// Entrywise real parts.
IntervalMatrix real_part(const RectMatrix& a);
IntervalMatrix real_part(const DiscMatrix& a);
bool contains(const RectMatrix& a, const ComplexPointMatrix& p);
ComplexPointMatrix mid_matrix(const RectMatrix& a);

/// Circulant matrix with first row c: entry (p, q) = c[(q - p) mod n].
IntervalMatrix circulant(std::span<const Interval> c);

}  // namespace ispec
