#include "ispec/eigvec_enclosure.hpp"

#include "ispec/rounding.hpp"

namespace ispec {

namespace r = rounding;

namespace {

IntervalVector solve_reduced(const IntervalMatrix& b, const IntervalVector& rhs,
                             const KrawczykOptions& options, bool& ok) {
  SolveReport rep = solve_enclosure(b, rhs, options);
  ok = rep.ok();
  return std::move(rep.enclosure);
}

RectVector solve_reduced(const RectMatrix& b, const RectVector& rhs,
                         const KrawczykOptions& options, bool& ok) {
  ComplexSolveReport rep = solve_complex_enclosure(b, rhs, options);
  ok = rep.ok();
  return std::move(rep.enclosure);
}

template <typename T>
Result<EigvecEnclosure<T>> enclose(const DenseMatrix<T>& a, const T& lambda,
                                   const KrawczykOptions& options) {
  if (!a.is_square() || a.rows() == 0) {
    throw std::invalid_argument("eigvec_enclose: matrix must be square");
  }
  const std::size_t n = a.rows();
  if (n == 1) return EigvecEnclosure<T>{{T(Interval(1.0))}, 0, 0};

  DenseMatrix<T> b = a;
  for (std::size_t i = 0; i < n; ++i) b(i, i) = a(i, i) - lambda;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<T> rhs;
      rhs.reserve(n - 1);
      for (std::size_t row = 0; row < n; ++row) {
        if (row != i) rhs.push_back(-b(row, j));
      }
      bool ok = false;
      std::vector<T> reduced = solve_reduced(b.minor(i, j), rhs, options, ok);
      if (!ok) continue;
      std::vector<T> x;
      x.reserve(n);
      x.insert(x.end(), reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(j));
      x.push_back(T(Interval(1.0)));
      x.insert(x.end(), reduced.begin() + static_cast<std::ptrdiff_t>(j), reduced.end());
      return EigvecEnclosure<T>{std::move(x), j, i};
    }
  }
  return FailureCause::kEigvecFailed;
}

}  // namespace

Result<EigvecEnclosure<Interval>> eigvec_enclose(const IntervalMatrix& a,
                                                 const Interval& lambda,
                                                 const KrawczykOptions& options) {
  return enclose(a, lambda, options);
}

Result<EigvecEnclosure<ComplexRect>> eigvec_enclose(const RectMatrix& a,
                                                    const ComplexRect& lambda,
                                                    const KrawczykOptions& options) {
  return enclose(a, lambda, options);
}

IntervalVector normalize_column(const IntervalVector& v) {
  double lo = 0.0, hi = 0.0;
  for (const Interval& x : v) {
    lo = r::add_down(lo, r::mul_down(mig(x), mig(x)));
    hi = r::add_up(hi, r::mul_up(mag(x), mag(x)));
  }
  const Interval norm(r::sqrt_down(lo), r::sqrt_up(hi));
  IntervalVector out(v.size());
  // Components of a unit vector lie in [-1, 1].
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = intersect(v[i] / norm, Interval::unit());
  }
  return out;
}

IntervalMatrix fallback_unit_box(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fallback_unit_box: n must be positive");
  return IntervalMatrix(n, n, Interval::unit());
}

}  // namespace ispec
