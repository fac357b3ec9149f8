#include <gtest/gtest.h>

#include <sstream>

#include "ispec/experiments.hpp"

namespace {

using ispec::ExperimentConfig;
using ispec::RunRecord;
using ispec::RunStatus;

TEST(Config, DefaultsValidate) { EXPECT_NO_THROW(ExperimentConfig{}.validate()); }

TEST(Config, RejectsBadValues) {
  auto expect_bad = [](auto mutate) {
    ExperimentConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), std::invalid_argument);
  };
  expect_bad([](ExperimentConfig& c) { c.n = 0; });
  expect_bad([](ExperimentConfig& c) { c.radius = -1.0; });
  expect_bad([](ExperimentConfig& c) { c.trials = 0; });
  expect_bad([](ExperimentConfig& c) { c.exponents = {}; });
  expect_bad([](ExperimentConfig& c) { c.exponents = {3, 3}; });
  expect_bad([](ExperimentConfig& c) { c.exponents = {0}; });
  expect_bad([](ExperimentConfig& c) { c.threads = 0; });
}

TEST(MatrixClass, ParsesAllNames) {
  for (auto c : {ispec::MatrixClass::kGeneral, ispec::MatrixClass::kSymmetric,
                 ispec::MatrixClass::kSymmetricWidebox, ispec::MatrixClass::kCirculant}) {
    EXPECT_EQ(ispec::parse_matrix_class(ispec::to_string(c)), c);
  }
  EXPECT_FALSE(ispec::parse_matrix_class("hermitian").has_value());
}

TEST(Generators, NormalizedAndShaped) {
  ispec::Rng rng(81);
  for (int t = 0; t < 50; ++t) {
    const auto a = ispec::gen_general(5, 10.0, 0.001, rng);
    // The raw matrix is scaled by an upper bound of its own norm.
    EXPECT_LE(ispec::spectral_norm_ub(a), 1.0 + 1e-12);
    for (const auto& x : a.entries()) EXPECT_GT(ispec::rad(x), 0.0);
    const auto s = ispec::gen_symmetric(4, 10.0, 0.001, rng);
    EXPECT_EQ(s.matrix(), s.matrix().transpose());
    const auto c = ispec::gen_circulant(5, 10.0, 0.001, rng);
    EXPECT_EQ(c.matrix, ispec::circulant(c.generator));
  }
}

TEST(Summarize, LowerMedianAndCauses) {
  std::vector<RunRecord> recs;
  auto add = [&](RunStatus st, std::optional<ispec::FailureCause> cause, std::optional<double> rho) {
    RunRecord r;
    r.trial = recs.size();
    r.k = 10;
    r.status = st;
    r.cause = cause;
    r.rho = rho;
    recs.push_back(r);
  };
  add(RunStatus::kSuccess, {}, 4.0);
  add(RunStatus::kSuccess, {}, 1.0);
  add(RunStatus::kSuccess, {}, 3.0);
  add(RunStatus::kSuccess, {}, 2.0);
  add(RunStatus::kFailed, ispec::FailureCause::kDiscsIntersect, {});
  add(RunStatus::kFailed, ispec::FailureCause::kInversionFailed, {});
  add(RunStatus::kFailed, ispec::FailureCause::kEigvecFailed, {});
  add(RunStatus::kFailed, ispec::FailureCause::kSolverFailed, {});
  add(RunStatus::kAnomaly, {}, {});
  const auto rows = ispec::summarize(recs);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].successes, 4u);
  EXPECT_EQ(*rows[0].median_rho, 2.0);
  EXPECT_EQ(*rows[0].mean_rho, 2.5);
  EXPECT_EQ(rows[0].fail_discs, 1u);
  EXPECT_EQ(rows[0].fail_inv, 1u);
  EXPECT_EQ(rows[0].fail_eigvec, 1u);
  EXPECT_EQ(rows[0].fail_solver, 2u);
}

TEST(Summarize, NoSuccessLeavesMedianEmpty) {
  RunRecord r;
  r.k = 5;
  r.status = RunStatus::kFailed;
  r.cause = ispec::FailureCause::kDiscsIntersect;
  const std::vector<RunRecord> recs{r};
  const auto rows = ispec::summarize(recs);
  EXPECT_FALSE(rows[0].median_rho.has_value());
}

ExperimentConfig small(ispec::MatrixClass c) {
  ExperimentConfig cfg;
  cfg.matrix_class = c;
  cfg.n = 4;
  cfg.trials = 8;
  cfg.exponents = {2, 15, 50};
  cfg.seed = 7;
  return cfg;
}

std::string records_csv(const ExperimentConfig& cfg) {
  std::ostringstream os;
  ispec::write_records_csv(os, cfg, ispec::run_comparison(cfg));
  return os.str();
}

TEST(RunComparison, RecordsOrderedByTrialAndK) {
  const auto cfg = small(ispec::MatrixClass::kGeneral);
  const auto recs = ispec::run_comparison(cfg);
  ASSERT_EQ(recs.size(), 24u);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(recs[i].trial, i / 3);
    EXPECT_EQ(recs[i].k, cfg.exponents[i % 3]);
    if (recs[i].status == RunStatus::kSuccess) {
      EXPECT_EQ(*recs[i].rho, *recs[i].r_spectral / recs[i].r_binary);
    }
  }
}

TEST(RunComparison, DeterministicAcrossRunsAndThreads) {
  for (auto c : {ispec::MatrixClass::kGeneral, ispec::MatrixClass::kSymmetric,
                 ispec::MatrixClass::kSymmetricWidebox, ispec::MatrixClass::kCirculant}) {
    auto cfg = small(c);
    const std::string a = records_csv(cfg);
    EXPECT_EQ(a, records_csv(cfg));
    cfg.threads = 3;
    EXPECT_EQ(a, records_csv(cfg));
    cfg.seed = 8;
    EXPECT_NE(a, records_csv(cfg));
  }
}

TEST(Csv, Headers) {
  const auto cfg = small(ispec::MatrixClass::kCirculant);
  const std::string rec = records_csv(cfg);
  EXPECT_EQ(rec.substr(0, rec.find('\n')),
            "class,n,c,r,seed,trial,k,status,cause,R_binary,R_spectral,rho");
  std::ostringstream os;
  ispec::write_summary_csv(os, cfg, ispec::summarize(ispec::run_comparison(cfg)));
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')),
            "class,n,c,r,k,successes,median_rho,mean_rho,fail_discs,fail_eigvec,fail_inv,"
            "fail_solver");
  EXPECT_NE(rec.find("\ncirculant,4,10,0.001,7,0,2,success,,"), std::string::npos);
}

TEST(RunComparison, ZeroMatrixIsAnomaly) {
  auto cfg = small(ispec::MatrixClass::kSymmetric);
  cfg.center = 0.0;
  cfg.radius = 0.0;
  const auto recs = ispec::run_comparison(cfg);
  for (const auto& r : recs) {
    EXPECT_EQ(r.status, RunStatus::kAnomaly);
    EXPECT_FALSE(r.rho.has_value());
  }
  const auto rows = ispec::summarize(recs);
  EXPECT_EQ(rows[0].fail_solver, cfg.trials);
}

}  // namespace
