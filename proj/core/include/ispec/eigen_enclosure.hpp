#pragma once

#include <vector>

#include "ispec/interval_matrix.hpp"
#include "ispec/result.hpp"

namespace ispec {

/// Eigenvalue discs <centers[i], radius> of a general interval matrix.
///
/// Every eigenvalue of every member lies in the union of the discs. Centers
/// are ordered lexicographically by (real, imaginary) part.
struct EigDiscs {
  std::vector<Complex> centers;
  double radius = 0.0;
  /// All pairwise center distances exceed 2 * radius (outward-rounded).
  bool disjoint = false;
  /// radii[i] <= radius; the disc <centers[i], radii[i]> holds exactly one
  /// eigenvalue of each member. Equal to radius unless the discs are
  /// disjoint and a scaled Gershgorin argument isolates a smaller disc.
  std::vector<double> radii;

  ComplexDisc disc(std::size_t i) const { return {centers[i], radius}; }
  ComplexDisc refined_disc(std::size_t i) const { return {centers[i], radii[i]}; }
};

/// Bauer-Fike discs around the eigenvalues of mid(a).
///
/// The midpoint is diagonalized in floating point as V D V^-1 + residual.
/// Bauer-Fike is applied to the exactly diagonalizable V D V^-1 with the
/// residual folded into the perturbation:
///   r = ||V|| ||V^-1|| (||rad(a)|| + ||mid(a) V - V D|| ||V^-1||),
/// every norm an upper bound of the spectral norm and V^-1 a verified
/// inverse enclosure. Fails with kSolverFailed when the midpoint cannot be
/// diagonalized or its eigenvector matrix cannot be inverted.
Result<EigDiscs> bauer_fike_discs(const IntervalMatrix& a);

/// True iff the discs are pairwise disjoint; tangent discs intersect.
bool check_assumption(const EigDiscs& d);

/// Index-wise eigenvalue enclosures of a symmetric interval matrix: the i-th
/// smallest eigenvalue of every symmetric member lies in intervals[i].
struct SymEigBounds {
  IntervalVector intervals;
  /// Whether disjoint Gershgorin intervals tightened the result.
  bool gershgorin_refined = false;
};

/// Weyl-type bounds around the eigenvalues of mid(a), intersected with the
/// sorted interval Gershgorin intervals when those are pairwise disjoint.
Result<SymEigBounds> symmetric_eigen_bounds(const SymIntervalMatrix& a);

}  // namespace ispec
