#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "ispec/eigen_enclosure.hpp"
#include "ispec/interval_matrix.hpp"
#include "ispec/linsys.hpp"
#include "ispec/result.hpp"

namespace ispec {

enum class DecompositionKind { kGeneral, kSymmetric, kCirculant };
enum class EigvecProvenance { kAlgorithm, kUnitBoxFallback, kClosedForm };

std::string_view to_string(DecompositionKind kind);
std::string_view to_string(EigvecProvenance provenance);

/// Enclosures (Lambda, V, V^-1) such that every member A of the input can
/// be written A = V Lambda V^-1 with factors taken from the enclosures.
/// Lambda is diagonal and stored by its diagonal discs.
struct SpectralDecomposition {
  DecompositionKind kind = DecompositionKind::kGeneral;
  EigvecProvenance provenance = EigvecProvenance::kAlgorithm;
  std::vector<ComplexDisc> lambda;
  RectMatrix v;
  RectMatrix v_inv;
  /// Per column, the index normalized to 1 (general kind only).
  std::vector<std::size_t> pivots;

  std::size_t size() const { return lambda.size(); }
};

/// Enclosures (Lambda, Q) such that every symmetric member A can be written
/// A = Q Lambda Q^T with Q orthogonal.
struct SymmetricDecomposition {
  EigvecProvenance provenance = EigvecProvenance::kAlgorithm;
  IntervalVector lambda;  // ascending
  IntervalMatrix q;
  /// Per column, the component that is positive in the enclosed unit
  /// eigenvector (algorithm provenance only).
  std::vector<std::size_t> pivots;

  std::size_t size() const { return lambda.size(); }
};

/// Discs, then one eigenvector enclosure per disc, then a verified inverse.
/// Failure causes: kSolverFailed, kDiscsIntersect, kEigvecFailed,
/// kInversionFailed.
Result<SpectralDecomposition> decompose_general(const IntervalMatrix& a,
                                                const KrawczykOptions& options = {});

/// Eigenvalue bounds and normalized eigenvector columns. If any column cannot
/// be verified, or force_fallback is set, Q becomes the all-[-1, 1] box.
/// Fails only with kSolverFailed from the eigenvalue bounds.
Result<SymmetricDecomposition> decompose_symmetric(const SymIntervalMatrix& a,
                                                   bool force_fallback = false,
                                                   const KrawczykOptions& options = {});

/// Closed-form decomposition of the circulant matrices with first row in c:
/// V is the unitary Fourier matrix with columns (1, w_j, ..., w_j^(n-1))/sqrt(n),
/// w_j = exp(2 pi i j / n), and lambda_j = sum_m c_m w_j^m.
SpectralDecomposition decompose_circulant(const IntervalVector& c);

/// Enclosure of exp(2 pi i m / n); exact for the values 1, i, -1, -i.
ComplexRect root_of_unity(std::size_t n, std::size_t m);

/// Sampling check of a decomposition against members of its input.
struct ContainmentReport {
  std::size_t samples = 0;
  std::size_t eigenvalue_violations = 0;
  std::size_t eigenvector_violations = 0;
  std::size_t inverse_violations = 0;
  /// Samples whose eigenpairs could not be matched to the decomposition's
  /// convention (for instance a vanishing pivot component).
  std::size_t skipped = 0;

  std::size_t violations() const {
    return eigenvalue_violations + eigenvector_violations + inverse_violations;
  }
};

/// Draws vertex and interior members, eigendecomposes them in extended
/// precision, renormalizes to the decomposition's convention and counts
/// membership violations.
ContainmentReport verify_containment(const IntervalMatrix& a,
                                     const SpectralDecomposition& d,
                                     std::size_t samples, std::uint64_t seed);
ContainmentReport verify_containment(const SymIntervalMatrix& a,
                                     const SymmetricDecomposition& d,
                                     std::size_t samples, std::uint64_t seed);
/// Circulant variant: members are circulant matrices with first row in c.
ContainmentReport verify_containment(const IntervalVector& c,
                                     const SpectralDecomposition& d,
                                     std::size_t samples, std::uint64_t seed);

/// Writes "kind ... provenance ..." then Lambda (diagonal, as rectangles),
/// V and Vinv blocks in the matrix text format.
void write_decomposition(std::ostream& os, const SpectralDecomposition& d);
/// Writes Lambda (diagonal), Q and Q^T blocks.
void write_decomposition(std::ostream& os, const SymmetricDecomposition& d);

}  // namespace ispec
