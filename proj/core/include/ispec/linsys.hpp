#pragma once

#include <string_view>

#include "ispec/interval_matrix.hpp"

namespace ispec {

enum class SolveStatus { kSuccess, kSingularMidpoint, kNoContraction };

std::string_view to_string(SolveStatus status);

/// Epsilon-inflation parameters for the Krawczyk iteration.
struct KrawczykOptions {
  double inflation_factor = 1.1;
  double inflation_abs = 1e-20;
  int max_iterations = 15;
};

struct SolveReport {
  IntervalVector enclosure;
  SolveStatus status = SolveStatus::kNoContraction;
  bool ok() const { return status == SolveStatus::kSuccess; }
};

struct ComplexSolveReport {
  RectVector enclosure;
  SolveStatus status = SolveStatus::kNoContraction;
  bool ok() const { return status == SolveStatus::kSuccess; }
};

struct InverseReport {
  RectMatrix enclosure;
  SolveStatus status = SolveStatus::kNoContraction;
  bool ok() const { return status == SolveStatus::kSuccess; }
};

/// Preconditioned interval system A x = b that can be solved for many
/// right-hand sides.
///
/// Works in residual form: with C ~ mid(A)^-1 and x0 ~ C mid(b), iterate
/// Y <- C (b - A x0) + (I - C A) inflate(Y). Strict containment of the new
/// iterate in the inflated one certifies that every A in the matrix is
/// nonsingular and that x0 + Y covers the united solution set.
class KrawczykSolver {
 public:
  explicit KrawczykSolver(const IntervalMatrix& a, KrawczykOptions options = {});

  /// kSingularMidpoint when no preconditioner exists, kSuccess otherwise.
  SolveStatus status() const { return status_; }

  SolveReport solve(const IntervalVector& b) const;

 private:
  IntervalMatrix a_;
  KrawczykOptions options_;
  SolveStatus status_ = SolveStatus::kSuccess;
  PointMatrix a_mid_;
  PointMatrix precond_;
  IntervalMatrix contraction_;  // I - C A
};

/// Verified enclosure of {x : A x = b, A in a, b in b}.
SolveReport solve_enclosure(const IntervalMatrix& a, const IntervalVector& b,
                            const KrawczykOptions& options = {});

/// Real 2n embedding [[Re, -Im], [Im, Re]] with dependencies relaxed.
IntervalMatrix real_embedding(const RectMatrix& a);

/// Complex system solved through its real embedding.
ComplexSolveReport solve_complex_enclosure(const RectMatrix& a,
                                           const RectVector& b,
                                           const KrawczykOptions& options = {});

/// Column-wise enclosure of {V^-1 : V in v}. Failure signals a possibly
/// singular v.
InverseReport inverse_enclosure(const RectMatrix& v,
                                const KrawczykOptions& options = {});

}  // namespace ispec
