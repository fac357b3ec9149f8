#pragma once

#include <cstddef>
#include <vector>

#include "ispec/interval_matrix.hpp"
#include "ispec/linsys.hpp"
#include "ispec/result.hpp"

namespace ispec {

/// Enclosure of the eigenvectors belonging to one eigenvalue enclosure,
/// normalized so that vector[pivot_index] is exactly 1.
template <typename T>
struct EigvecEnclosure {
  std::vector<T> vector;
  std::size_t pivot_index = 0;
  std::size_t deleted_row = 0;
};

/// Eigenvector enclosure for the eigenvalue enclosure lambda of a.
///
/// With B = a - lambda I, scans (i, j) row-major; the first (n-1)-square
/// system B^{ij} x = -B^i_{*j} (row i and column j deleted) that the verified
/// solver certifies gives the eigenvector with 1 inserted at position j.
/// Fails with kEigvecFailed when no candidate can be verified.
Result<EigvecEnclosure<Interval>> eigvec_enclose(const IntervalMatrix& a,
                                                 const Interval& lambda,
                                                 const KrawczykOptions& options = {});
Result<EigvecEnclosure<ComplexRect>> eigvec_enclose(const RectMatrix& a,
                                                    const ComplexRect& lambda,
                                                    const KrawczykOptions& options = {});

/// v / ||v||_2 with the norm taken as the interval
/// [sqrt(sum mig(v_i)^2), sqrt(sum mag(v_i)^2)]. Throws std::domain_error if
/// that interval contains zero.
IntervalVector normalize_column(const IntervalVector& v);

/// n x n matrix with every entry [-1, 1]; contains every orthogonal matrix.
IntervalMatrix fallback_unit_box(std::size_t n);

}  // namespace ispec
