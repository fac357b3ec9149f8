#include "ispec/linsys.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "ispec/rounding.hpp"

namespace ispec {

namespace r = rounding;

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSuccess:
      return "success";
    case SolveStatus::kSingularMidpoint:
      return "singular-midpoint";
    case SolveStatus::kNoContraction:
      return "no-contraction";
  }
  return "unknown";
}

namespace {

IntervalVector inflate(const IntervalVector& y, const KrawczykOptions& opt) {
  IntervalVector x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double grown =
        r::add_up(r::mul_up(opt.inflation_factor, rad(y[i])), opt.inflation_abs);
    x[i] = Interval::from_mid_rad(mid(y[i]), grown);
  }
  return x;
}

// C * x for a point matrix C and interval vector x.
IntervalVector point_times(const PointMatrix& c, const IntervalVector& x) {
  IntervalVector y(static_cast<std::size_t>(c.rows()));
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    Interval acc(0.0);
    for (Eigen::Index k = 0; k < c.cols(); ++k) {
      acc += Interval(c(i, k)) * x[static_cast<std::size_t>(k)];
    }
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

bool all_point_zero(const IntervalVector& b) {
  return std::all_of(b.begin(), b.end(),
                     [](const Interval& x) { return x == Interval(0.0); });
}

bool is_real(const RectMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const ComplexRect& z) { return z.is_real(); });
}

}  // namespace

KrawczykSolver::KrawczykSolver(const IntervalMatrix& a, KrawczykOptions options)
    : a_(a), options_(options) {
  if (!a.is_square()) {
    throw std::invalid_argument("KrawczykSolver: matrix must be square");
  }
  if (!is_bounded(a)) {
    throw std::invalid_argument("KrawczykSolver: unbounded matrix");
  }
  const std::size_t n = a.rows();
  a_mid_ = mid_matrix(a);
  Eigen::FullPivLU<PointMatrix> lu(a_mid_);
  if (n == 0 || !lu.isInvertible()) {
    status_ = SolveStatus::kSingularMidpoint;
    return;
  }
  precond_ = lu.inverse();
  if (!precond_.allFinite()) {
    status_ = SolveStatus::kSingularMidpoint;
    return;
  }
  contraction_ = IntervalMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Interval acc(0.0);
      for (std::size_t k = 0; k < n; ++k) {
        acc += Interval(precond_(static_cast<Eigen::Index>(i),
                                 static_cast<Eigen::Index>(k))) *
               a(k, j);
      }
      contraction_(i, j) = Interval(i == j ? 1.0 : 0.0) - acc;
    }
  }
}

SolveReport KrawczykSolver::solve(const IntervalVector& b) const {
  const std::size_t n = a_.rows();
  if (b.size() != n) throw std::invalid_argument("solve: rhs length mismatch");
  if (status_ != SolveStatus::kSuccess) return {{}, status_};

  Eigen::VectorXd b_mid(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) b_mid(static_cast<Eigen::Index>(i)) = mid(b[i]);
  Eigen::VectorXd x0 = precond_ * b_mid;
  x0 += precond_ * (b_mid - a_mid_ * x0);
  if (!x0.allFinite()) return {{}, SolveStatus::kNoContraction};

  // z = C (b - A x0)
  IntervalVector residual(n);
  for (std::size_t i = 0; i < n; ++i) {
    Interval acc = b[i];
    for (std::size_t k = 0; k < n; ++k) {
      acc -= a_(i, k) * Interval(x0(static_cast<Eigen::Index>(k)));
    }
    residual[i] = acc;
  }
  const IntervalVector z = point_times(precond_, residual);

  IntervalVector y = z;
  for (int iter = 0; iter < options_.max_iterations; ++iter) {
    const IntervalVector x = inflate(y, options_);
    y = z;
    const IntervalVector gx = contraction_ * x;
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += gx[i];
      inside = inside && x[i].interior_contains(y[i]);
    }
    if (!inside) continue;


    // Containment proves every member of A is nonsingular, so a zero
    // right-hand side has exactly the zero solution.
    if (all_point_zero(b)) return {IntervalVector(n, Interval(0.0)), SolveStatus::kSuccess};
    IntervalVector result(n);
    for (std::size_t i = 0; i < n; ++i) {
      result[i] = Interval(x0(static_cast<Eigen::Index>(i))) + y[i];
    }
    return {std::move(result), SolveStatus::kSuccess};
  }
  return {{}, SolveStatus::kNoContraction};
}

SolveReport solve_enclosure(const IntervalMatrix& a, const IntervalVector& b,
                            const KrawczykOptions& options) {
  return KrawczykSolver(a, options).solve(b);
}

IntervalMatrix real_embedding(const RectMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  IntervalMatrix e(2 * n, 2 * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      e(i, j) = a(i, j).re;
      e(i, j + m) = -a(i, j).im;
      e(i + n, j) = a(i, j).im;
      e(i + n, j + m) = a(i, j).re;
    }
  }
  return e;
}

ComplexSolveReport solve_complex_enclosure(const RectMatrix& a,
                                           const RectVector& b,
                                           const KrawczykOptions& options) {
  const std::size_t n = a.rows();
  if (!a.is_square()) {
    throw std::invalid_argument("solve_complex_enclosure: matrix must be square");
  }
  if (b.size() != n) {
    throw std::invalid_argument("solve_complex_enclosure: rhs length mismatch");
  }

  if (is_real(a)) {
    // Real and imaginary parts decouple exactly.
    const KrawczykSolver solver(real_part(a), options);
    IntervalVector b_re(n), b_im(n);
    for (std::size_t i = 0; i < n; ++i) {
      b_re[i] = b[i].re;
      b_im[i] = b[i].im;
    }
    SolveReport re = solver.solve(b_re);
    if (!re.ok()) return {{}, re.status};
    SolveReport im = solver.solve(b_im);
    if (!im.ok()) return {{}, im.status};
    RectVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = {re.enclosure[i], im.enclosure[i]};
    return {std::move(x), SolveStatus::kSuccess};
  }

  IntervalVector rhs(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = b[i].re;
    rhs[i + n] = b[i].im;
  }
  SolveReport real = solve_enclosure(real_embedding(a), rhs, options);
  if (!real.ok()) return {{}, real.status};
  RectVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = {real.enclosure[i], real.enclosure[i + n]};
  }
  return {std::move(x), SolveStatus::kSuccess};
}

InverseReport inverse_enclosure(const RectMatrix& v,
                                const KrawczykOptions& options) {
  if (!v.is_square()) {
    throw std::invalid_argument("inverse_enclosure: matrix must be square");
  }
  const std::size_t n = v.rows();
  RectMatrix inv(n, n);

  if (is_real(v)) {
    const KrawczykSolver solver(real_part(v), options);
    if (solver.status() != SolveStatus::kSuccess) return {{}, solver.status()};
    for (std::size_t k = 0; k < n; ++k) {
      IntervalVector e(n, Interval(0.0));
      e[k] = Interval(1.0);
      SolveReport col = solver.solve(e);
      if (!col.ok()) return {{}, col.status};
      for (std::size_t i = 0; i < n; ++i) inv(i, k) = ComplexRect(col.enclosure[i]);
    }
    return {std::move(inv), SolveStatus::kSuccess};
  }

  const KrawczykSolver solver(real_embedding(v), options);
  if (solver.status() != SolveStatus::kSuccess) return {{}, solver.status()};
  for (std::size_t k = 0; k < n; ++k) {
    IntervalVector e(2 * n, Interval(0.0));
    e[k] = Interval(1.0);
    SolveReport col = solver.solve(e);
    if (!col.ok()) return {{}, col.status};
    for (std::size_t i = 0; i < n; ++i) {
      inv(i, k) = {col.enclosure[i], col.enclosure[i + n]};
    }
  }
  return {std::move(inv), SolveStatus::kSuccess};
}

}  // namespace ispec
