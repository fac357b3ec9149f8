#include "ispec/spectral_decomp.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "ispec/eigvec_enclosure.hpp"
#include "ispec/matrix_io.hpp"
#include "ispec/random.hpp"
#include "ispec/rounding.hpp"

namespace ispec {

namespace r = rounding;

std::string_view to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::kGeneral:
      return "general";
    case DecompositionKind::kSymmetric:
      return "symmetric";
    case DecompositionKind::kCirculant:
      return "circulant";
  }
  return "unknown";
}

std::string_view to_string(EigvecProvenance provenance) {
  switch (provenance) {
    case EigvecProvenance::kAlgorithm:
      return "algorithm";
    case EigvecProvenance::kUnitBoxFallback:
      return "unit-box-fallback";
    case EigvecProvenance::kClosedForm:
      return "closed-form";
  }
  return "unknown";
}

Result<SpectralDecomposition> decompose_general(const IntervalMatrix& a,
                                                const KrawczykOptions& options) {
  Result<EigDiscs> discs = bauer_fike_discs(a);
  if (!discs) return discs.failure();
  if (!discs->disjoint) return FailureCause::kDiscsIntersect;

  const std::size_t n = a.rows();
  const RectMatrix a_rect = to_rect(a);
  SpectralDecomposition d;
  d.kind = DecompositionKind::kGeneral;
  d.provenance = EigvecProvenance::kAlgorithm;
  d.v = RectMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexDisc disc = discs->refined_disc(i);
    d.lambda.push_back(disc);
    if (disc.center.imag() == 0.0) {
      // A disc centered on the real axis, disjoint from the others, holds a
      // single eigenvalue of each real member; it must be real.
      const Interval lambda = Interval::from_mid_rad(disc.center.real(), disc.radius);
      auto vec = eigvec_enclose(a, lambda, options);
      if (!vec) return FailureCause::kEigvecFailed;
      for (std::size_t k = 0; k < n; ++k) d.v(k, i) = ComplexRect(vec->vector[k]);
      d.pivots.push_back(vec->pivot_index);
    } else {
      auto vec = eigvec_enclose(a_rect, disc_to_rect(disc), options);
      if (!vec) return FailureCause::kEigvecFailed;
      d.v.set_column(i, vec->vector);
      d.pivots.push_back(vec->pivot_index);
    }
  }

  InverseReport inv = inverse_enclosure(d.v, options);
  if (!inv.ok()) return FailureCause::kInversionFailed;
  d.v_inv = std::move(inv.enclosure);
  return d;
}

Result<SymmetricDecomposition> decompose_symmetric(const SymIntervalMatrix& a,
                                                   bool force_fallback,
                                                   const KrawczykOptions& options) {
  Result<SymEigBounds> bounds = symmetric_eigen_bounds(a);
  if (!bounds) return bounds.failure();

  const std::size_t n = a.size();
  SymmetricDecomposition d;
  d.lambda = bounds->intervals;
  if (!force_fallback) {
    d.q = IntervalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto vec = eigvec_enclose(a.matrix(), d.lambda[i], options);
      if (!vec) {
        force_fallback = true;
        break;
      }
      d.q.set_column(i, normalize_column(vec->vector));
      d.pivots.push_back(vec->pivot_index);
    }
  }
  if (force_fallback) {
    d.provenance = EigvecProvenance::kUnitBoxFallback;
    d.q = fallback_unit_box(n);
    d.pivots.clear();
  }
  return d;
}

namespace {

double ulp(double x) {
  const double ax = std::fabs(x);
  return std::nextafter(ax, r::kInf) - ax;
}

Interval widen(double v, double slack) {
  const double w = r::add_up(r::mul_up(4.0, ulp(v)), slack);
  return intersect(Interval(r::sub_down(v, w), r::add_up(v, w)), Interval::unit());
}

}  // namespace

ComplexRect root_of_unity(std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  m %= n;
  if ((4 * m) % n == 0) {
    switch (4 * m / n) {
      case 0:
        return {Interval(1.0), Interval(0.0)};
      case 1:
        return {Interval(0.0), Interval(1.0)};
      case 2:
        return {Interval(-1.0), Interval(0.0)};
      default:
        return {Interval(0.0), Interval(-1.0)};
    }
  }
  // theta carries at most three roundings (pi, product, quotient); the
  // ulp(theta) term covers them, the ulp(value) term covers cos/sin.
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
  const double theta_slack = r::mul_up(4.0, ulp(theta));
  return {widen(std::cos(theta), theta_slack), widen(std::sin(theta), theta_slack)};
}

SpectralDecomposition decompose_circulant(const IntervalVector& c) {
  const std::size_t n = c.size();
  if (n == 0) throw std::invalid_argument("decompose_circulant: empty generator");
  for (const Interval& x : c) {
    if (!x.is_bounded()) throw std::invalid_argument("decompose_circulant: unbounded");
  }
  const Interval scale = Interval(1.0) / sqrt(Interval(static_cast<double>(n)));

  SpectralDecomposition d;
  d.kind = DecompositionKind::kCirculant;
  d.provenance = EigvecProvenance::kClosedForm;
  d.v = RectMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexRect lambda(Interval(0.0));
    for (std::size_t m = 0; m < n; ++m) {
      const ComplexRect w = root_of_unity(n, j * m);
      lambda += ComplexRect(c[m]) * w;
      d.v(m, j) = ComplexRect(scale) * w;
    }
    d.lambda.push_back(rect_to_disc(lambda));
  }
  d.v_inv = adjoint(d.v);
  return d;
}

// --- sampling checks -------------------------------------------------------

namespace {

using MatrixLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexLD = std::complex<long double>;
using ComplexMatrixLD = Eigen::Matrix<ComplexLD, Eigen::Dynamic, Eigen::Dynamic>;

Complex to_double(ComplexLD z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

SampleMode mode_for(std::size_t s) {
  return s % 2 == 0 ? SampleMode::kVertex : SampleMode::kInterior;
}

bool column_contains(const RectMatrix& v, std::size_t col,
                     const Eigen::Matrix<ComplexLD, Eigen::Dynamic, 1>& x) {
  for (std::size_t k = 0; k < v.rows(); ++k) {
    if (!v(k, col).contains(to_double(x(static_cast<Eigen::Index>(k))))) return false;
  }
  return true;
}

std::size_t find_disc(const std::vector<ComplexDisc>& discs, Complex z) {
  for (std::size_t i = 0; i < discs.size(); ++i) {
    if (discs[i].contains(z)) return i;
  }
  return discs.size();
}

}  // namespace

ContainmentReport verify_containment(const IntervalMatrix& a,
                                     const SpectralDecomposition& d,
                                     std::size_t samples, std::uint64_t seed) {
  const std::size_t n = a.rows();
  if (!a.is_square() || d.size() != n || d.pivots.size() != n) {
    throw std::invalid_argument("verify_containment: shape mismatch");
  }
  ContainmentReport report;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const MatrixLD sample = sample_member(a, rng, mode_for(s)).cast<long double>();
    ++report.samples;
    Eigen::EigenSolver<MatrixLD> solver(sample);
    if (solver.info() != Eigen::Success) {
      ++report.skipped;
      continue;
    }
    const auto values = solver.eigenvalues();
    const ComplexMatrixLD vectors = solver.eigenvectors();

    ComplexMatrixLD v_sample(n, n);
    std::vector<bool> used(n, false);
    bool matched = true;
    for (Eigen::Index l = 0; l < static_cast<Eigen::Index>(n); ++l) {
      const std::size_t i = find_disc(d.lambda, to_double(values(l)));
      if (i == n) {
        ++report.eigenvalue_violations;
        matched = false;
        continue;
      }
      const ComplexLD pivot = vectors(static_cast<Eigen::Index>(d.pivots[i]), l);
      if (used[i] || std::abs(pivot) < 1e-300L) {
        matched = false;
        continue;
      }
      used[i] = true;
      Eigen::Matrix<ComplexLD, Eigen::Dynamic, 1> x = vectors.col(l) / pivot;
      // Exactly 1 by construction; complex division leaves a residue.
      x(static_cast<Eigen::Index>(d.pivots[i])) = 1.0L;
      v_sample.col(static_cast<Eigen::Index>(i)) = x;
      if (!column_contains(d.v, i, x)) ++report.eigenvector_violations;
    }
    if (!matched) {
      ++report.skipped;
      continue;
    }
    const ComplexMatrixLD inv = v_sample.inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (!column_contains(d.v_inv, i, inv.col(static_cast<Eigen::Index>(i)))) {
        ++report.inverse_violations;
        break;
      }
    }
  }
  return report;
}

ContainmentReport verify_containment(const SymIntervalMatrix& a,
                                     const SymmetricDecomposition& d,
                                     std::size_t samples, std::uint64_t seed) {
  const std::size_t n = a.size();
  if (d.size() != n) throw std::invalid_argument("verify_containment: shape mismatch");
  const bool fallback = d.provenance == EigvecProvenance::kUnitBoxFallback;
  const RectMatrix q = to_rect(d.q);
  ContainmentReport report;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const MatrixLD sample =
        sample_symmetric_member(a, rng, mode_for(s)).cast<long double>();
    ++report.samples;
    Eigen::SelfAdjointEigenSolver<MatrixLD> solver(sample);
    if (solver.info() != Eigen::Success) {
      ++report.skipped;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      if (!d.lambda[i].contains(static_cast<double>(solver.eigenvalues()(ii)))) {
        ++report.eigenvalue_violations;
      }
      Eigen::Matrix<ComplexLD, Eigen::Dynamic, 1> x =
          solver.eigenvectors().col(ii).cast<ComplexLD>();
      if (!fallback) {
        const long double p = x(static_cast<Eigen::Index>(d.pivots[i])).real();
        if (p == 0.0L) {
          ++report.skipped;
          continue;
        }
        if (p < 0.0L) x = -x;
      }
      if (!column_contains(q, i, x)) ++report.eigenvector_violations;
    }
  }
  return report;
}

ContainmentReport verify_containment(const IntervalVector& c,
                                     const SpectralDecomposition& d,
                                     std::size_t samples, std::uint64_t seed) {
  const std::size_t n = c.size();
  if (d.size() != n) throw std::invalid_argument("verify_containment: shape mismatch");
  ContainmentReport report;

  // V and V^H are sample independent. Quarter turns are set exactly, as in
  // root_of_unity, since polar() leaves residues of order 1e-20 there.
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const ComplexLD quarter[] = {{1.0L, 0.0L}, {0.0L, 1.0L}, {-1.0L, 0.0L}, {0.0L, -1.0L}};
  ComplexMatrixLD fourier(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t e = (j * m) % n;
      const ComplexLD w = (4 * e) % n == 0
                              ? quarter[4 * e / n]
                              : std::polar(1.0L, two_pi * static_cast<long double>(e) /
                                                     static_cast<long double>(n));
      fourier(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j)) =
          w / std::sqrt(static_cast<long double>(n));
    }
  }
  const ComplexMatrixLD fourier_adj = fourier.adjoint();
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    if (!column_contains(d.v, j, fourier.col(jj))) ++report.eigenvector_violations;
    if (!column_contains(d.v_inv, j, fourier_adj.col(jj))) ++report.inverse_violations;
  }

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Eigen::VectorXd g = sample_member(c, rng, mode_for(s));
    ++report.samples;
    for (std::size_t j = 0; j < n; ++j) {
      ComplexLD lambda = 0.0L;
      for (std::size_t m = 0; m < n; ++m) {
        lambda += static_cast<long double>(g(static_cast<Eigen::Index>(m))) *
                  fourier(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j)) *
                  std::sqrt(static_cast<long double>(n));
      }
      if (!d.lambda[j].contains(to_double(lambda))) ++report.eigenvalue_violations;
    }
    // Independent check: a general eigensolver's spectrum lies in the discs.
    MatrixLD member(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        member(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
            g(static_cast<Eigen::Index>((q + n - p) % n));
      }
    }
    Eigen::EigenSolver<MatrixLD> solver(member, false);
    if (solver.info() != Eigen::Success) continue;
    for (Eigen::Index l = 0; l < static_cast<Eigen::Index>(n); ++l) {
      if (find_disc(d.lambda, to_double(solver.eigenvalues()(l))) == n) {
        ++report.eigenvalue_violations;
      }
    }
  }
  return report;
}

void write_decomposition(std::ostream& os, const SpectralDecomposition& d) {
  os << "kind " << to_string(d.kind) << " provenance " << to_string(d.provenance)
     << '\n';
  RectMatrix lambda(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) lambda(i, i) = disc_to_rect(d.lambda[i]);
  os << "Lambda\n";
  write_matrix(os, lambda);
  os << "V\n";
  write_matrix(os, d.v);
  os << "Vinv\n";
  write_matrix(os, d.v_inv);
}

void write_decomposition(std::ostream& os, const SymmetricDecomposition& d) {
  os << "kind " << to_string(DecompositionKind::kSymmetric) << " provenance "
     << to_string(d.provenance) << '\n';
  IntervalMatrix lambda(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) lambda(i, i) = d.lambda[i];
  os << "Lambda\n";
  write_matrix(os, lambda);
  os << "V\n";
  write_matrix(os, d.q);
  os << "Vinv\n";
  write_matrix(os, d.q.transpose());
}

}  // namespace ispec
