#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ispec/interval_matrix.hpp"
#include "ispec/random.hpp"
#include "ispec/result.hpp"

namespace ispec {

enum class MatrixClass { kGeneral, kSymmetric, kSymmetricWidebox, kCirculant };

std::string_view to_string(MatrixClass c);
std::optional<MatrixClass> parse_matrix_class(std::string_view name);

struct ExperimentConfig {
  MatrixClass matrix_class = MatrixClass::kGeneral;
  std::size_t n = 5;
  double center = 10.0;
  double radius = 0.001;
  std::size_t trials = 100;
  std::vector<unsigned> exponents{15, 20, 30, 50, 80, 120, 200};
  std::uint64_t seed = 1;
  /// Symmetric class only: skip eigenvector verification and use the
  /// all-[-1, 1] eigenvector box.
  bool force_fallback = false;
  unsigned threads = 1;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

enum class RunStatus { kSuccess, kFailed, kAnomaly };

std::string_view to_string(RunStatus status);

/// One trial at one exponent. rho = r_spectral / r_binary on success.
struct RunRecord {
  std::size_t trial = 0;
  unsigned k = 0;
  RunStatus status = RunStatus::kSuccess;
  std::optional<FailureCause> cause;
  double r_binary = 0.0;
  std::optional<double> r_spectral;
  std::optional<double> rho;
};

/// Per-exponent aggregate over the successful trials.
struct SummaryRow {
  unsigned k = 0;
  std::size_t successes = 0;
  std::optional<double> median_rho;  // lower middle element
  std::optional<double> mean_rho;
  std::size_t fail_discs = 0;
  std::size_t fail_eigvec = 0;
  std::size_t fail_inv = 0;
  /// Solver failures plus anomalies (zero binary radius).
  std::size_t fail_solver = 0;
};

/// Midpoint center * G and radius radius * G' with G uniform on (-1, 1) and
/// G' on (0, 1), divided by spectral_norm_ub of the raw matrix.
IntervalMatrix gen_general(std::size_t n, double center, double radius, Rng& rng);
/// As gen_general with G and G' drawn on and above the diagonal and mirrored.
SymIntervalMatrix gen_symmetric(std::size_t n, double center, double radius, Rng& rng);

struct CirculantSample {
  IntervalVector generator;  // first row
  IntervalMatrix matrix;
};
/// Generator vectors g, g' drawn like gen_general's entries, normalized by
/// spectral_norm_ub of the raw circulant matrix.
CirculantSample gen_circulant(std::size_t n, double center, double radius, Rng& rng);

/// Runs every trial with its own substream of cfg.seed and returns records
/// ordered by (trial, k). Each trial's decomposition is reused for all k.
std::vector<RunRecord> run_comparison(const ExperimentConfig& cfg);

std::vector<SummaryRow> summarize(std::span<const RunRecord> records);

void write_records_csv(std::ostream& os, const ExperimentConfig& cfg,
                       std::span<const RunRecord> records);
void write_summary_csv(std::ostream& os, const ExperimentConfig& cfg,
                       std::span<const SummaryRow> rows);

}  // namespace ispec
