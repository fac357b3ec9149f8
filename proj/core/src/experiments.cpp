#include "ispec/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ispec/eigen_enclosure.hpp"
#include "ispec/matrix_power.hpp"
#include "ispec/spectral_decomp.hpp"

namespace ispec {

std::string_view to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::kGeneral:
      return "general";
    case MatrixClass::kSymmetric:
      return "symmetric";
    case MatrixClass::kSymmetricWidebox:
      return "symmetric-widebox";
    case MatrixClass::kCirculant:
      return "circulant";
  }
  return "unknown";
}

std::optional<MatrixClass> parse_matrix_class(std::string_view name) {
  for (MatrixClass c : {MatrixClass::kGeneral, MatrixClass::kSymmetric,
                        MatrixClass::kSymmetricWidebox, MatrixClass::kCirculant}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kSuccess:
      return "success";
    case RunStatus::kFailed:
      return "fail";
    case RunStatus::kAnomaly:
      return "anomaly";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!std::isfinite(center)) throw std::invalid_argument("center must be finite");
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("radius must be finite and nonnegative");
  }
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (exponents.empty()) throw std::invalid_argument("exponents must be nonempty");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1) throw std::invalid_argument("exponents must be positive");
    if (i > 0 && exponents[i] <= exponents[i - 1]) {
      throw std::invalid_argument("exponents must be strictly ascending");
    }
  }
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
}

// --- generators -------------------------------------------------------------

namespace {

IntervalMatrix normalized(const IntervalMatrix& raw) {
  const double norm = spectral_norm_ub(raw);
  return norm > 0.0 ? divide(raw, norm) : raw;
}

}  // namespace

IntervalMatrix gen_general(std::size_t n, double center, double radius, Rng& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  PointMatrix mid(m, m), rad(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) mid(i, j) = center * rng.uniform(-1.0, 1.0);
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) rad(i, j) = radius * rng.uniform_open01();
  }
  return normalized(from_mid_rad(mid, rad));
}

SymIntervalMatrix gen_symmetric(std::size_t n, double center, double radius, Rng& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  PointMatrix mid(m, m), rad(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      mid(i, j) = mid(j, i) = center * rng.uniform(-1.0, 1.0);
    }
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      rad(i, j) = rad(j, i) = radius * rng.uniform_open01();
    }
  }
  return SymIntervalMatrix(normalized(from_mid_rad(mid, rad)));
}

CirculantSample gen_circulant(std::size_t n, double center, double radius, Rng& rng) {
  Eigen::VectorXd g(static_cast<Eigen::Index>(n)), g_rad(static_cast<Eigen::Index>(n));
  for (auto& x : g) x = center * rng.uniform(-1.0, 1.0);
  for (auto& x : g_rad) x = radius * rng.uniform_open01();
  const IntervalMatrix raw_row = from_mid_rad(g.transpose(), g_rad.transpose());
  IntervalVector row(n);
  for (std::size_t m = 0; m < n; ++m) row[m] = raw_row(0, m);
  const double norm = spectral_norm_ub(circulant(row));
  if (norm > 0.0) {
    for (Interval& x : row) x = x / Interval(norm);
  }
  return {row, circulant(row)};
}

// --- comparison pipeline ------------------------------------------------------

namespace {

// The spectral side of one trial: either a failure cause or a function of k.
struct SpectralSide {
  std::optional<FailureCause> failure;
  std::function<IntervalMatrix(unsigned)> power;
};

RunRecord compare(std::size_t trial, unsigned k, const IntervalMatrix& a,
                  const SpectralSide& spectral) {
  RunRecord rec;
  rec.trial = trial;
  rec.k = k;
  rec.r_binary = sum_radii(power_binary(a, k).enclosure);
  if (spectral.failure) {
    rec.status = RunStatus::kFailed;
    rec.cause = spectral.failure;
    return rec;
  }
  rec.r_spectral = sum_radii(spectral.power(k));
  if (rec.r_binary == 0.0) {
    rec.status = RunStatus::kAnomaly;
    return rec;
  }
  rec.rho = *rec.r_spectral / rec.r_binary;
  return rec;
}

std::vector<RunRecord> run_trial(const ExperimentConfig& cfg, std::size_t trial) {
  Rng rng = Rng::substream(cfg.seed, trial);
  IntervalMatrix a;
  SpectralSide side;
  switch (cfg.matrix_class) {
    case MatrixClass::kGeneral: {
      a = gen_general(cfg.n, cfg.center, cfg.radius, rng);
      auto d = decompose_general(a);
      if (!d) {
        side.failure = d.failure();
      } else {
        side.power = [d = std::move(d).value()](unsigned k) {
          return power_spectral(d, k).enclosure;
        };
      }
      break;
    }
    case MatrixClass::kSymmetric: {
      const SymIntervalMatrix s = gen_symmetric(cfg.n, cfg.center, cfg.radius, rng);
      a = s.matrix();
      auto d = decompose_symmetric(s, cfg.force_fallback);
      if (!d) {
        side.failure = d.failure();
      } else {
        side.power = [d = std::move(d).value()](unsigned k) {
          return power_symmetric_spectral(d, k).enclosure;
        };
      }
      break;
    }
    case MatrixClass::kSymmetricWidebox: {
      const SymIntervalMatrix s = gen_symmetric(cfg.n, cfg.center, cfg.radius, rng);
      a = s.matrix();
      auto bounds = symmetric_eigen_bounds(s);
      if (!bounds) {
        side.failure = bounds.failure();
      } else {
        side.power = [lambda = bounds->intervals](unsigned k) {
          return power_widebox(lambda, k).enclosure;
        };
      }
      break;
    }
    case MatrixClass::kCirculant: {
      CirculantSample c = gen_circulant(cfg.n, cfg.center, cfg.radius, rng);
      a = std::move(c.matrix);
      side.power = [d = decompose_circulant(c.generator)](unsigned k) {
        return power_circulant(d, k).enclosure;
      };
      break;
    }
  }
  std::vector<RunRecord> out;
  for (unsigned k : cfg.exponents) out.push_back(compare(trial, k, a, side));
  return out;
}

}  // namespace

std::vector<RunRecord> run_comparison(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<std::vector<RunRecord>> per_trial(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < cfg.trials;) {
      try {
        per_trial[t] = run_trial(cfg, t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(cfg.threads, cfg.trials));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<RunRecord> records;
  records.reserve(cfg.trials * cfg.exponents.size());
  for (auto& trial : per_trial) {
    records.insert(records.end(), trial.begin(), trial.end());
  }
  return records;
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records) {
  std::map<unsigned, std::pair<SummaryRow, std::vector<double>>> by_k;
  for (const RunRecord& rec : records) {
    auto& [row, rhos] = by_k[rec.k];
    row.k = rec.k;
    if (rec.status == RunStatus::kSuccess) {
      ++row.successes;
      rhos.push_back(*rec.rho);
    } else if (rec.status == RunStatus::kAnomaly) {
      ++row.fail_solver;
    } else {
      switch (*rec.cause) {
        case FailureCause::kDiscsIntersect:
          ++row.fail_discs;
          break;
        case FailureCause::kEigvecFailed:
          ++row.fail_eigvec;
          break;
        case FailureCause::kInversionFailed:
          ++row.fail_inv;
          break;
        case FailureCause::kSolverFailed:
          ++row.fail_solver;
          break;
      }
    }
  }
  std::vector<SummaryRow> rows;
  for (auto& [k, entry] : by_k) {
    auto& [row, rhos] = entry;
    if (!rhos.empty()) {
      double sum = 0.0;
      for (double x : rhos) sum += x;
      row.mean_rho = sum / static_cast<double>(rhos.size());
      std::sort(rhos.begin(), rhos.end());
      row.median_rho = rhos[(rhos.size() - 1) / 2];
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

void write_prefix(std::ostream& os, const ExperimentConfig& cfg) {
  os << to_string(cfg.matrix_class) << ',' << cfg.n << ',' << num(cfg.center) << ','
     << num(cfg.radius) << ',';
}

}  // namespace

void write_records_csv(std::ostream& os, const ExperimentConfig& cfg,
                       std::span<const RunRecord> records) {
  os << "class,n,c,r,seed,trial,k,status,cause,R_binary,R_spectral,rho\n";
  for (const RunRecord& rec : records) {
    write_prefix(os, cfg);
    os << cfg.seed << ',' << rec.trial << ',' << rec.k << ',' << to_string(rec.status)
       << ',';
    if (rec.cause) {
      os << to_string(*rec.cause);
    } else if (rec.status == RunStatus::kAnomaly) {
      os << "zero-binary-radius";
    }
    os << ',' << num(rec.r_binary) << ',' << num(rec.r_spectral) << ','
       << num(rec.rho) << '\n';
  }
}

void write_summary_csv(std::ostream& os, const ExperimentConfig& cfg,
                       std::span<const SummaryRow> rows) {
  os << "class,n,c,r,k,successes,median_rho,mean_rho,fail_discs,fail_eigvec,"
        "fail_inv,fail_solver\n";
  for (const SummaryRow& row : rows) {
    write_prefix(os, cfg);
    os << row.k << ',' << row.successes << ',' << num(row.median_rho) << ','
       << num(row.mean_rho) << ',' << row.fail_discs << ',' << row.fail_eigvec << ','
       << row.fail_inv << ',' << row.fail_solver << '\n';
  }
}

}  // namespace ispec
