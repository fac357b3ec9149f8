#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "ispec/eigen_enclosure.hpp"
#include "ispec/experiments.hpp"
#include "oracles.hpp"

namespace {

using ispec::Interval;
using ispec::IntervalMatrix;

bool in_union(const ispec::EigDiscs& d, std::complex<long double> z) {
  for (std::size_t i = 0; i < d.centers.size(); ++i) {
    const std::complex<long double> c(d.centers[i].real(), d.centers[i].imag());
    if (std::abs(z - c) <= static_cast<long double>(d.radius)) return true;
  }
  return false;
}

TEST(BauerFike, DiscUnionContainsSampledSpectra) {
  ispec::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 3);
    const IntervalMatrix a = ispec::gen_general(n, 10.0, t % 2 ? 0.01 : 0.001, rng);
    const auto d = ispec::bauer_fike_discs(a);
    ASSERT_TRUE(d.ok());
    for (int s = 0; s < 20; ++s) {
      const auto mode = s % 2 ? ispec::SampleMode::kVertex : ispec::SampleMode::kInterior;
      const oracle::MatrixLD p = ispec::sample_member(a, rng, mode).cast<long double>();
      Eigen::EigenSolver<oracle::MatrixLD> es(p, false);
      for (Eigen::Index l = 0; l < p.rows(); ++l) {
        ASSERT_TRUE(in_union(*d, es.eigenvalues()(l)));
      }
    }
  }
}

TEST(BauerFike, RefinedDiscsHoldOneEigenvalueEach) {
  ispec::Rng rng(42);
  int refined = 0;
  for (int t = 0; t < 100; ++t) {
    const IntervalMatrix a = ispec::gen_general(5, 10.0, 0.001, rng);
    const auto d = ispec::bauer_fike_discs(a);
    ASSERT_TRUE(d.ok());
    if (!ispec::check_assumption(*d)) continue;
    for (std::size_t i = 0; i < 5; ++i) {
      ASSERT_LE(d->radii[i], d->radius);
      if (d->radii[i] < d->radius) ++refined;
    }
    for (int s = 0; s < 10; ++s) {
      const oracle::MatrixLD p =
          ispec::sample_member(a, rng, ispec::SampleMode::kVertex).cast<long double>();
      Eigen::EigenSolver<oracle::MatrixLD> es(p, false);
      for (std::size_t i = 0; i < 5; ++i) {
        int hits = 0;
        for (Eigen::Index l = 0; l < 5; ++l) {
          const auto z = es.eigenvalues()(l);
          const std::complex<long double> c(d->centers[i].real(), d->centers[i].imag());
          if (std::abs(z - c) <= static_cast<long double>(d->radii[i])) ++hits;
        }
        ASSERT_EQ(hits, 1);
      }
    }
  }
  EXPECT_GT(refined, 0);
}

TEST(BauerFike, PointDiagonalMatrixHasTinyDiscs) {
  IntervalMatrix a(3, 3, Interval(0.0));
  a(0, 0) = Interval(1.0);
  a(1, 1) = Interval(2.0);
  a(2, 2) = Interval(-3.0);
  const auto d = ispec::bauer_fike_discs(a);
  ASSERT_TRUE(d.ok());
  EXPECT_TRUE(ispec::check_assumption(*d));
  EXPECT_LT(d->radius, 1e-12);
  // Lexicographic order by real part.
  EXPECT_EQ(d->centers[0].real(), -3.0);
  EXPECT_EQ(d->centers[2].real(), 2.0);
}

TEST(BauerFike, OverlappingDiscsFailAssumption) {
  IntervalMatrix a(2, 2, Interval(0.0));
  a(0, 0) = Interval(0.9, 1.1);
  a(1, 1) = Interval(0.95, 1.15);
  const auto d = ispec::bauer_fike_discs(a);
  ASSERT_TRUE(d.ok());
  EXPECT_FALSE(ispec::check_assumption(*d));
}

TEST(BauerFike, TangentDiscsIntersect) {
  ispec::EigDiscs d;
  d.centers = {ispec::Complex(0.0), ispec::Complex(2.0)};
  d.radius = 1.0;
  d.radii = {1.0, 1.0};
  EXPECT_FALSE(ispec::check_assumption(d));
  d.radius = 0.999;
  EXPECT_TRUE(ispec::check_assumption(d));
}

TEST(SymmetricBounds, ContainIndexwiseEigenvalues) {
  ispec::Rng rng(43);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 6);
    const ispec::SymIntervalMatrix a = ispec::gen_symmetric(n, 10.0, t % 2 ? 0.01 : 0.001, rng);
    const auto b = ispec::symmetric_eigen_bounds(a);
    ASSERT_TRUE(b.ok());
    for (std::size_t i = 1; i < n; ++i) ASSERT_LE(b->intervals[i - 1].lo(), b->intervals[i].lo());
    for (int s = 0; s < 20; ++s) {
      const auto mode = s % 2 ? ispec::SampleMode::kVertex : ispec::SampleMode::kInterior;
      const oracle::MatrixLD p = ispec::sample_symmetric_member(a, rng, mode).cast<long double>();
      Eigen::SelfAdjointEigenSolver<oracle::MatrixLD> es(p, Eigen::EigenvaluesOnly);
      for (std::size_t i = 0; i < n; ++i) {
        ASSERT_TRUE(b->intervals[i].contains(
            static_cast<double>(es.eigenvalues()(static_cast<Eigen::Index>(i)))));
      }
    }
  }
}

TEST(SymmetricBounds, DiagonalUsesGershgorin) {
  IntervalMatrix a(3, 3, Interval(0.0));
  a(0, 0) = Interval(5.0, 6.0);
  a(1, 1) = Interval(1.0, 2.0);
  a(2, 2) = Interval(-1.0, 0.5);
  const auto b = ispec::symmetric_eigen_bounds(ispec::SymIntervalMatrix(a));
  ASSERT_TRUE(b.ok());
  EXPECT_TRUE(b->gershgorin_refined);
  EXPECT_EQ(b->intervals[0], Interval(-1.0, 0.5));
  EXPECT_EQ(b->intervals[1], Interval(1.0, 2.0));
  EXPECT_EQ(b->intervals[2], Interval(5.0, 6.0));
}

TEST(SymmetricBounds, PointMatrixIsTight) {
  ispec::Rng rng(44);
  const ispec::SymIntervalMatrix a = ispec::gen_symmetric(6, 10.0, 0.0, rng);
  const auto b = ispec::symmetric_eigen_bounds(a);
  ASSERT_TRUE(b.ok());
  for (const Interval& x : b->intervals) EXPECT_LT(ispec::rad(x), 1e-12);
}

}  // namespace
