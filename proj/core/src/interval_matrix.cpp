#include "ispec/interval_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "ispec/rounding.hpp"

namespace ispec {

namespace r = rounding;

IntervalMatrix from_bounds(const PointMatrix& lower, const PointMatrix& upper) {
  if (lower.rows() != upper.rows() || lower.cols() != upper.cols()) {
    throw std::invalid_argument("from_bounds: shape mismatch");
  }
  IntervalMatrix a(lower.rows(), lower.cols());
  for (Eigen::Index i = 0; i < lower.rows(); ++i) {
    for (Eigen::Index j = 0; j < lower.cols(); ++j) {
      if (!std::isfinite(lower(i, j)) || !std::isfinite(upper(i, j))) {
        throw std::invalid_argument("from_bounds: unbounded entry");
      }
      a(i, j) = Interval(lower(i, j), upper(i, j));
    }
  }
  return a;
}

IntervalMatrix from_mid_rad(const PointMatrix& mid, const PointMatrix& rad) {
  if (mid.rows() != rad.rows() || mid.cols() != rad.cols()) {
    throw std::invalid_argument("from_mid_rad: shape mismatch");
  }
  IntervalMatrix a(mid.rows(), mid.cols());
  for (Eigen::Index i = 0; i < mid.rows(); ++i) {
    for (Eigen::Index j = 0; j < mid.cols(); ++j) {
      a(i, j) = Interval::from_mid_rad(mid(i, j), rad(i, j));
    }
  }
  if (!is_bounded(a)) throw std::invalid_argument("from_mid_rad: unbounded");
  return a;
}

IntervalMatrix to_interval(const PointMatrix& p) { return from_bounds(p, p); }

namespace {

template <typename F>
PointMatrix entrywise(const IntervalMatrix& a, F f) {
  PointMatrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = f(a(i, j));
  }
  return p;
}

// sqrt(||M||_1 ||M||_inf) rounded upward; mags is a row-major magnitude
// matrix with nonnegative entries.
double norm_bound(std::size_t rows, std::size_t cols,
                  const std::vector<double>& mags) {
  double max_row = 0.0;
  std::vector<double> col_sums(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double m = mags[i * cols + j];
      row = r::add_up(row, m);
      col_sums[j] = r::add_up(col_sums[j], m);
    }
    max_row = std::max(max_row, row);
  }
  const double max_col =
      col_sums.empty() ? 0.0 : *std::max_element(col_sums.begin(), col_sums.end());
  return r::sqrt_up(r::mul_up(max_row, max_col));
}

template <typename T>
double spectral_norm_ub_impl(const DenseMatrix<T>& a) {
  std::vector<double> mags(a.entries().size());
  std::transform(a.entries().begin(), a.entries().end(), mags.begin(),
                 [](const T& x) { return mag(x); });
  return norm_bound(a.rows(), a.cols(), mags);
}

}  // namespace

PointMatrix lower_matrix(const IntervalMatrix& a) {
  return entrywise(a, [](const Interval& x) { return x.lo(); });
}

PointMatrix upper_matrix(const IntervalMatrix& a) {
  return entrywise(a, [](const Interval& x) { return x.hi(); });
}

PointMatrix mid_matrix(const IntervalMatrix& a) {
  return entrywise(a, [](const Interval& x) { return mid(x); });
}

PointMatrix rad_matrix(const IntervalMatrix& a) {
  return entrywise(a, [](const Interval& x) { return rad(x); });
}

PointMatrix mag_matrix(const IntervalMatrix& a) {
  return entrywise(a, [](const Interval& x) { return mag(x); });
}

bool contains(const IntervalMatrix& a, const PointMatrix& p) {
  if (static_cast<Eigen::Index>(a.rows()) != p.rows() ||
      static_cast<Eigen::Index>(a.cols()) != p.cols()) {
    throw std::invalid_argument("contains: shape mismatch");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).contains(p(i, j))) return false;
    }
  }
  return true;
}

bool contains(const IntervalMatrix& outer, const IntervalMatrix& inner) {
  require_same_shape(outer, inner);
  for (std::size_t k = 0; k < outer.entries().size(); ++k) {
    if (!outer.entries()[k].contains(inner.entries()[k])) return false;
  }
  return true;
}

bool is_bounded(const IntervalMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const Interval& x) { return x.is_bounded(); });
}

double spectral_norm_ub(const IntervalMatrix& a) {
  return spectral_norm_ub_impl(a);
}
double spectral_norm_ub(const RectMatrix& a) { return spectral_norm_ub_impl(a); }
double spectral_norm_ub(const DiscMatrix& a) { return spectral_norm_ub_impl(a); }

double sum_radii(const IntervalMatrix& a) {
  double sum = 0.0;
  for (const Interval& x : a.entries()) sum += rad(x);
  return sum;
}

IntervalMatrix divide(const IntervalMatrix& a, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("divide: scale must be positive");
  IntervalMatrix b(a.rows(), a.cols());
  const Interval div(s);
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    b.entries()[k] = a.entries()[k] / div;
  }
  return b;
}

SymIntervalMatrix::SymIntervalMatrix(IntervalMatrix a) : a_(std::move(a)) {
  if (!a_.is_square()) {
    throw std::invalid_argument("SymIntervalMatrix: matrix must be square");
  }
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    for (std::size_t j = i + 1; j < a_.cols(); ++j) {
      // Equal bounds is the same as symmetric midpoint and radius.
      if (a_(i, j) != a_(j, i)) {
        throw std::invalid_argument(
            "SymIntervalMatrix: midpoint and radius must be symmetric");
      }
    }
  }
}

RectMatrix to_rect(const IntervalMatrix& a) {
  RectMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    c.entries()[k] = ComplexRect(a.entries()[k]);
  }
  return c;
}

RectMatrix to_rect(const ComplexPointMatrix& p) {
  RectMatrix c(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) c(i, j) = ComplexRect(p(i, j));
  }
  return c;
}

RectMatrix to_rect(const DiscMatrix& a) {
  RectMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    c.entries()[k] = disc_to_rect(a.entries()[k]);
  }
  return c;
}

DiscMatrix to_disc(const RectMatrix& a) {
  DiscMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    c.entries()[k] = rect_to_disc(a.entries()[k]);
  }
  return c;
}

RectMatrix adjoint(const RectMatrix& a) {
  RectMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = conj(a(i, j));
  }
  return t;
}

IntervalMatrix real_part(const RectMatrix& a) {
  IntervalMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    c.entries()[k] = a.entries()[k].re;
  }
  return c;
}

IntervalMatrix real_part(const DiscMatrix& a) {
  IntervalMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    c.entries()[k] = real_part(a.entries()[k]);
  }
  return c;
}

bool contains(const RectMatrix& a, const ComplexPointMatrix& p) {
  if (static_cast<Eigen::Index>(a.rows()) != p.rows() ||
      static_cast<Eigen::Index>(a.cols()) != p.cols()) {
    throw std::invalid_argument("contains: shape mismatch");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).contains(p(i, j))) return false;
    }
  }
  return true;
}

ComplexPointMatrix mid_matrix(const RectMatrix& a) {
  ComplexPointMatrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = mid(a(i, j));
  }
  return p;
}

IntervalMatrix circulant(std::span<const Interval> c) {
  const std::size_t n = c.size();
  IntervalMatrix a(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) a(p, q) = c[(q + n - p) % n];
  }
  return a;
}

}  // namespace ispec
