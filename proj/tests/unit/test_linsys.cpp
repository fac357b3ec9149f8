#include <gtest/gtest.h>

#include <Eigen/LU>

#include "ispec/linsys.hpp"
#include "ispec/random.hpp"
#include "oracles.hpp"

namespace {

using ispec::Interval;
using ispec::IntervalMatrix;
using ispec::IntervalVector;
using ispec::PointMatrix;

// Diagonally dominant interval matrix with radius r around a random midpoint.
IntervalMatrix dominant(std::size_t n, double r, ispec::Rng& rng) {
  PointMatrix m(n, n), rad(n, n);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rng.uniform(-1.0, 1.0) + (i == j ? 2.0 * static_cast<double>(n) : 0.0);
      rad(i, j) = r * rng.uniform_open01();
    }
  }
  return ispec::from_mid_rad(m, rad);
}

IntervalVector random_rhs(std::size_t n, double r, ispec::Rng& rng) {
  IntervalVector b(n);
  for (auto& x : b) x = Interval::from_mid_rad(rng.uniform(-1.0, 1.0), r * rng.uniform_open01());
  return b;
}

TEST(Krawczyk, ContainsVertexHull2x2) {
  ispec::Rng rng(31);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const IntervalMatrix a = dominant(2, 0.2, rng);
    const IntervalVector b = random_rhs(2, 0.2, rng);
    const auto sol = ispec::solve_enclosure(a, b);
    const oracle::Hull2 h = oracle::vertex_hull_2x2(a, b);
    ASSERT_TRUE(h.regular);
    ASSERT_TRUE(sol.ok());
    for (int i = 0; i < 2; ++i) {
      ASSERT_LE(sol.enclosure[i].lo(), h.lo[i]);
      ASSERT_GE(sol.enclosure[i].hi(), h.hi[i]);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(Krawczyk, PointSystemIsTight) {
  PointMatrix m(2, 2);
  m << 4.0, 1.0, 2.0, 3.0;
  const IntervalVector b{Interval(1.0), Interval(2.0)};
  const auto sol = ispec::solve_enclosure(ispec::to_interval(m), b);
  ASSERT_TRUE(sol.ok());
  // x = (0.1, 0.6)
  EXPECT_TRUE(sol.enclosure[0].contains(0.1));
  EXPECT_TRUE(sol.enclosure[1].contains(0.6));
  EXPECT_LT(ispec::rad(sol.enclosure[0]), 1e-14);
}

TEST(Krawczyk, SampledSolutionsContained) {
  ispec::Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const IntervalMatrix a = dominant(5, 0.05, rng);
    const IntervalVector b = random_rhs(5, 0.05, rng);
    const auto sol = ispec::solve_enclosure(a, b);
    ASSERT_TRUE(sol.ok());
    for (int s = 0; s < 20; ++s) {
      const auto mode = s % 2 ? ispec::SampleMode::kVertex : ispec::SampleMode::kInterior;
      const oracle::MatrixLD pa = ispec::sample_member(a, rng, mode).cast<long double>();
      const Eigen::Matrix<long double, Eigen::Dynamic, 1> pb =
          ispec::sample_member(b, rng, mode).cast<long double>();
      const Eigen::Matrix<long double, Eigen::Dynamic, 1> x = pa.fullPivLu().solve(pb);
      for (std::size_t i = 0; i < 5; ++i) {
        ASSERT_TRUE(sol.enclosure[i].contains(static_cast<double>(x(static_cast<Eigen::Index>(i)))));
      }
    }
  }
}

TEST(Krawczyk, SingularMidpointReported) {
  PointMatrix m(2, 2);
  m << 1.0, 2.0, 2.0, 4.0;
  const auto sol = ispec::solve_enclosure(ispec::to_interval(m), {Interval(1.0), Interval(1.0)});
  EXPECT_EQ(sol.status, ispec::SolveStatus::kSingularMidpoint);
}

TEST(Krawczyk, PossiblySingularMatrixFails) {
  IntervalMatrix a(2, 2);
  a(0, 0) = Interval(0.0, 2.0);
  a(0, 1) = Interval(1.0);
  a(1, 0) = Interval(1.0);
  a(1, 1) = Interval(0.0, 2.0);
  const auto sol = ispec::solve_enclosure(a, {Interval(1.0), Interval(1.0)});
  EXPECT_FALSE(sol.ok());
}

TEST(Krawczyk, ZeroRhsGivesExactZero) {
  ispec::Rng rng(33);
  const IntervalMatrix a = dominant(3, 0.1, rng);
  const auto sol = ispec::solve_enclosure(a, IntervalVector(3, Interval(0.0)));
  ASSERT_TRUE(sol.ok());
  for (const Interval& x : sol.enclosure) EXPECT_EQ(x, Interval(0.0));
}

TEST(Krawczyk, RhsLengthChecked) {
  EXPECT_THROW(ispec::solve_enclosure(IntervalMatrix::identity(2), {Interval(1.0)}),
               std::invalid_argument);
  EXPECT_THROW(ispec::KrawczykSolver(IntervalMatrix(2, 3)), std::invalid_argument);
}

TEST(ComplexSolve, ContainsSampledSolutions) {
  ispec::Rng rng(34);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 3;
    ispec::RectMatrix a(n, n);
    ispec::RectVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double d = i == j ? 4.0 : 0.0;
        a(i, j) = {Interval::from_mid_rad(rng.uniform(-1, 1) + d, 0.01),
                   Interval::from_mid_rad(rng.uniform(-1, 1), 0.01)};
      }
      b[i] = {Interval::from_mid_rad(rng.uniform(-1, 1), 0.01), Interval(rng.uniform(-1, 1))};
    }
    const auto sol = ispec::solve_complex_enclosure(a, b);
    ASSERT_TRUE(sol.ok());
    for (int s = 0; s < 20; ++s) {
      using CLD = std::complex<long double>;
      Eigen::Matrix<CLD, Eigen::Dynamic, Eigen::Dynamic> pa(n, n);
      Eigen::Matrix<CLD, Eigen::Dynamic, 1> pb(n);
      auto pick = [&](const Interval& x) {
        return s % 2 ? (rng.coin() ? x.lo() : x.hi()) : std::clamp(rng.uniform(x.lo(), x.hi()), x.lo(), x.hi());
      };
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          pa(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              CLD(pick(a(i, j).re), pick(a(i, j).im));
        }
        pb(static_cast<Eigen::Index>(i)) = CLD(pick(b[i].re), pick(b[i].im));
      }
      const Eigen::Matrix<CLD, Eigen::Dynamic, 1> x = pa.fullPivLu().solve(pb);
      for (std::size_t i = 0; i < n; ++i) {
        const CLD xi = x(static_cast<Eigen::Index>(i));
        ASSERT_TRUE(sol.enclosure[i].contains(
            ispec::Complex(static_cast<double>(xi.real()), static_cast<double>(xi.imag()))));
      }
    }
  }
}

TEST(Inverse, ContainsInverseOfMembers) {
  ispec::Rng rng(35);
  for (int t = 0; t < 50; ++t) {
    const IntervalMatrix a = dominant(4, 0.01, rng);
    const auto inv = ispec::inverse_enclosure(ispec::to_rect(a));
    ASSERT_TRUE(inv.ok());
    for (int s = 0; s < 10; ++s) {
      const oracle::MatrixLD p =
          ispec::sample_member(a, rng, ispec::SampleMode::kVertex).cast<long double>();
      const oracle::MatrixLD pi = p.inverse();
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          ASSERT_TRUE(inv.enclosure(i, j).re.contains(
              static_cast<double>(pi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))));
          ASSERT_EQ(inv.enclosure(i, j).im, Interval(0.0));
        }
      }
    }
  }
}

TEST(Inverse, ComplexUnitaryMatrix) {
  ispec::RectMatrix v(2, 2);
  const double h = 0.7071067811865476;
  v(0, 0) = ispec::Complex(h, 0.0);
  v(0, 1) = ispec::Complex(0.0, h);
  v(1, 0) = ispec::Complex(0.0, h);
  v(1, 1) = ispec::Complex(h, 0.0);
  const auto inv = ispec::inverse_enclosure(v);
  ASSERT_TRUE(inv.ok());
  // inverse = [[h, -ih], [-ih, h]] / (2 h^2)
  EXPECT_NEAR(ispec::mid(inv.enclosure(0, 1).im), -h / (2 * h * h), 1e-14);
  EXPECT_TRUE(inv.enclosure(0, 1).re.contains(0.0));
  EXPECT_LT(ispec::rad(inv.enclosure(0, 0).re), 1e-14);
}

}  // namespace
