#include "ispec/eigen_enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "ispec/linsys.hpp"
#include "ispec/rounding.hpp"

namespace ispec {

namespace r = rounding;

std::string_view to_string(FailureCause cause) {
  switch (cause) {
    case FailureCause::kSolverFailed:
      return "solver-failed";
    case FailureCause::kDiscsIntersect:
      return "discs-intersect";
    case FailureCause::kEigvecFailed:
      return "eigvec-failed";
    case FailureCause::kInversionFailed:
      return "inversion-failed";
  }
  return "unknown";
}

namespace {

void require_square_bounded(const IntervalMatrix& a, const char* who) {
  if (!a.is_square() || a.rows() == 0) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
  if (!is_bounded(a)) {
    throw std::invalid_argument(std::string(who) + ": unbounded entries");
  }
}

// Lower bound on |c_i - c_j|.
double center_distance(const std::vector<Complex>& c, std::size_t i, std::size_t j) {
  const Interval dx = Interval(c[i].real()) - Interval(c[j].real());
  const Interval dy = Interval(c[i].imag()) - Interval(c[j].imag());
  return r::hypot_down(mig(dx), mig(dy));
}

template <typename T>
PointMatrix magnitudes(const DenseMatrix<T>& e) {
  PointMatrix m(e.rows(), e.cols());
  for (std::size_t i = 0; i < e.rows(); ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = mag(e(i, j));
    }
  }
  return m;
}

// Smaller of the largest row sum and the largest column sum of m: by
// Gershgorin on rows or on columns, every eigenvalue of diag(c) + E with
// |E| <= m lies within that distance of some c_i.
double gershgorin_radius(const PointMatrix& m) {
  double row_max = 0.0, col_max = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double row = 0.0, col = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row = r::add_up(row, m(i, j));
      col = r::add_up(col, m(j, i));
    }
    row_max = std::max(row_max, row);
    col_max = std::max(col_max, col);
  }
  return std::min(row_max, col_max);
}

// m bounds |E| entrywise where every member is similar to diag(c) + E.
// Scaling row i by s and column i by 1/s, the i-th Gershgorin disc has
// radius m_ii + s * sum_{j != i} m_ij; once it is disjoint from the others
// it holds exactly one eigenvalue.
void refine_radii(const std::vector<Complex>& centers, std::vector<double>& radii,
                  const PointMatrix& m) {
  const std::size_t n = centers.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off = r::add_up(off, m(ii, static_cast<Eigen::Index>(j)));
    }
    for (double s = 1.0; s >= 0x1p-40; s *= 0.5) {
      const double ri = r::add_up(m(ii, ii), r::mul_up(s, off));
      if (!(ri < radii[i])) continue;
      bool separated = true;
      for (std::size_t j = 0; j < n && separated; ++j) {
        if (j == i) continue;
        const auto jj = static_cast<Eigen::Index>(j);
        double rj = r::div_up(m(jj, ii), s);
        for (std::size_t l = 0; l < n; ++l) {
          if (l != i) rj = r::add_up(rj, m(jj, static_cast<Eigen::Index>(l)));
        }
        separated = center_distance(centers, i, j) > r::add_up(ri, rj);
      }
      if (separated) radii[i] = ri;
    }
  }
}

// Entrywise [-rad a, rad a].
IntervalMatrix spread(const IntervalMatrix& a) {
  const PointMatrix d = rad_matrix(a);
  return from_bounds(-d, d);
}

}  // namespace

Result<EigDiscs> bauer_fike_discs(const IntervalMatrix& a) {
  require_square_bounded(a, "bauer_fike_discs");
  const auto n = static_cast<Eigen::Index>(a.rows());
  const PointMatrix center = mid_matrix(a);

  Eigen::EigenSolver<PointMatrix> solver(center, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) return FailureCause::kSolverFailed;
  const Eigen::VectorXcd values = solver.eigenvalues();
  const Eigen::MatrixXcd vectors = solver.eigenvectors();
  if (!values.allFinite() || !vectors.allFinite()) {
    return FailureCause::kSolverFailed;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    const Complex& u = values(x);
    const Complex& v = values(y);
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });

  EigDiscs discs;
  Eigen::MatrixXcd v_hat(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    discs.centers.push_back(values(src));
    v_hat.col(k) = vectors.col(src);
  }

  const RectMatrix v = to_rect(v_hat);
  const InverseReport w = inverse_enclosure(v);
  if (!w.ok()) return FailureCause::kSolverFailed;

  // Residual mid(a) V - V D.
  const RectMatrix av = to_rect(to_interval(center)) * v;
  RectMatrix residual(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) {
      residual(i, j) = av(i, j) - v(i, j) * ComplexRect(discs.centers[j]);
    }
  }

  const double norm_v = spectral_norm_ub(v);
  const double norm_w = spectral_norm_ub(w.enclosure);
  const double norm_res = spectral_norm_ub(residual);
  const double norm_rad = spectral_norm_ub(to_interval(rad_matrix(a)));
  const double kappa_radius = r::mul_up(
      r::mul_up(norm_v, norm_w), r::add_up(norm_rad, r::mul_up(norm_res, norm_w)));

  // For the point matrix V, V^-1 A V = D + E with E in W (Res + [-rad a,
  // rad a] V) for every member A.
  const PointMatrix e_mag =
      magnitudes(w.enclosure * (residual + to_rect(spread(a)) * v));

  discs.radius = std::min(kappa_radius, gershgorin_radius(e_mag));
  if (!std::isfinite(discs.radius)) return FailureCause::kSolverFailed;
  discs.disjoint = check_assumption(discs);
  discs.radii.assign(a.rows(), discs.radius);
  if (discs.disjoint) {
    refine_radii(discs.centers, discs.radii, e_mag);
    refine_radii(discs.centers, discs.radii, e_mag.transpose());
  }
  return discs;
}

bool check_assumption(const EigDiscs& d) {
  const double diameter = r::mul_up(2.0, d.radius);
  for (std::size_t i = 0; i < d.centers.size(); ++i) {
    for (std::size_t j = i + 1; j < d.centers.size(); ++j) {
      if (!(center_distance(d.centers, i, j) > diameter)) return false;
    }
  }
  return true;
}

Result<SymEigBounds> symmetric_eigen_bounds(const SymIntervalMatrix& sym) {
  const IntervalMatrix& a = sym.matrix();
  require_square_bounded(a, "symmetric_eigen_bounds");
  const std::size_t n = a.rows();
  const PointMatrix center = mid_matrix(a);

  Eigen::SelfAdjointEigenSolver<PointMatrix> solver(center);
  if (solver.info() != Eigen::Success) return FailureCause::kSolverFailed;
  const Eigen::VectorXd d_hat = solver.eigenvalues();  // ascending
  const PointMatrix q_hat = solver.eigenvectors();
  if (!d_hat.allFinite() || !q_hat.allFinite()) return FailureCause::kSolverFailed;

  // Q^T Q = I + F. By Ostrowski, lambda_i(Q D Q^T) = theta_i d_i with
  // theta_i in [1 - ||F||, 1 + ||F||]; Weyl then covers A - Q D Q^T.
  const IntervalMatrix q = to_interval(q_hat);
  const IntervalMatrix qt = q.transpose();
  const IntervalMatrix f = qt * q - IntervalMatrix::identity(n);
  const double norm_f = spectral_norm_ub(f);
  if (!(norm_f < 1.0)) return FailureCause::kSolverFailed;

  IntervalMatrix qd = q;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      qd(i, j) = q(i, j) * Interval(d_hat(static_cast<Eigen::Index>(j)));
    }
  }
  const double norm_e = spectral_norm_ub(a - qd * qt);

  SymEigBounds bounds;
  bounds.intervals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double di = d_hat(static_cast<Eigen::Index>(i));
    const double radius = r::add_up(r::mul_up(std::fabs(di), norm_f), norm_e);
    if (!std::isfinite(radius)) return FailureCause::kSolverFailed;
    bounds.intervals[i] = Interval::from_mid_rad(di, radius);
  }

  // Per-eigenvalue refinement on Q^-1 A Q = D + E, E in W (Res + [-rad a,
  // rad a] Q). An isolated refined interval meets no other index's bound,
  // so the eigenvalue it holds is the i-th one.
  const KrawczykSolver q_solver(q);
  if (q_solver.status() == SolveStatus::kSuccess) {
    IntervalMatrix w(n, n);
    bool inverted = true;
    for (std::size_t k = 0; k < n && inverted; ++k) {
      IntervalVector e(n, Interval(0.0));
      e[k] = Interval(1.0);
      SolveReport col = q_solver.solve(e);
      inverted = col.ok();
      if (inverted) w.set_column(k, col.enclosure);
    }
    if (inverted) {
      const IntervalMatrix residual = to_interval(center) * q - qd;
      const PointMatrix e_mag = magnitudes(w * (residual + spread(a) * q));
      std::vector<Complex> centers(d_hat.begin(), d_hat.end());
      std::vector<double> radii(n, r::kInf);
      refine_radii(centers, radii, e_mag);
      refine_radii(centers, radii, e_mag.transpose());
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(radii[i])) continue;
        const Interval tight = Interval::from_mid_rad(centers[i].real(), radii[i]);
        bool isolated = true;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i && !(tight.hi() < bounds.intervals[j].lo() ||
                          bounds.intervals[j].hi() < tight.lo())) {
            isolated = false;
          }
        }
        if (isolated) bounds.intervals[i] = intersect(bounds.intervals[i], tight);
      }
    }
  }

  // Interval Gershgorin intervals a_ii + [-s_i, s_i].
  IntervalVector gersh(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) s = r::add_up(s, mag(a(i, j)));
    }
    gersh[i] = a(i, i) + Interval(-s, s);
  }
  std::sort(gersh.begin(), gersh.end(),
            [](const Interval& x, const Interval& y) { return x.lo() < y.lo(); });
  bool disjoint = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    disjoint = disjoint && gersh[i].hi() < gersh[i + 1].lo();
  }
  if (disjoint) {
    // Each disjoint Gershgorin interval holds exactly one eigenvalue, so the
    // sorted pairing is index-wise valid.
    for (std::size_t i = 0; i < n; ++i) {
      bounds.intervals[i] = intersect(bounds.intervals[i], gersh[i]);
    }
    bounds.gershgorin_refined = true;
  }
  return bounds;
}

}  // namespace ispec
