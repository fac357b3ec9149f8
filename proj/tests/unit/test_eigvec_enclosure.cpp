#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "ispec/eigen_enclosure.hpp"
#include "ispec/eigvec_enclosure.hpp"
#include "ispec/experiments.hpp"
#include "oracles.hpp"

namespace {

using ispec::Interval;
using ispec::IntervalMatrix;

TEST(Eigvec, KnownEigenvectorWithPivotOne) {
  // [[2, 1], [1, 2]]: eigenvalues 1 and 3 with vectors (1, -1) and (1, 1).
  IntervalMatrix a(2, 2);
  a(0, 0) = a(1, 1) = Interval(2.0);
  a(0, 1) = a(1, 0) = Interval(1.0);
  const auto v = ispec::eigvec_enclose(a, Interval(2.99, 3.01));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v->vector[v->pivot_index], Interval(1.0));
  for (const Interval& x : v->vector) EXPECT_TRUE(x.contains(1.0));
  // First candidate in row-major order: row 0 deleted, column 0 pivot.
  EXPECT_EQ(v->deleted_row, 0u);
  EXPECT_EQ(v->pivot_index, 0u);
}

TEST(Eigvec, OneByOneIsUnit) {
  const auto v = ispec::eigvec_enclose(IntervalMatrix(1, 1, Interval(4.0, 5.0)), Interval(4.0, 5.0));
  ASSERT_TRUE(v.ok());
  ASSERT_EQ(v->vector.size(), 1u);
  EXPECT_EQ(v->vector[0], Interval(1.0));
}

TEST(Eigvec, ContainsSampledEigenvectors) {
  ispec::Rng rng(51);
  int verified = 0;
  for (int t = 0; t < 60; ++t) {
    const IntervalMatrix a = ispec::gen_general(4, 10.0, 0.001, rng);
    const auto d = ispec::bauer_fike_discs(a);
    ASSERT_TRUE(d.ok());
    if (!ispec::check_assumption(*d)) continue;
    for (std::size_t i = 0; i < 4; ++i) {
      const ispec::ComplexDisc disc = d->refined_disc(i);
      if (disc.center.imag() != 0.0) continue;
      const Interval lambda = ispec::real_part(disc);
      const auto v = ispec::eigvec_enclose(a, lambda);
      if (!v.ok()) continue;
      ++verified;
      for (int s = 0; s < 10; ++s) {
        const oracle::MatrixLD p =
            ispec::sample_member(a, rng, ispec::SampleMode::kVertex).cast<long double>();
        Eigen::EigenSolver<oracle::MatrixLD> es(p);
        const auto vectors = es.eigenvectors().eval();
        for (Eigen::Index l = 0; l < 4; ++l) {
          const auto z = es.eigenvalues()(l);
          if (std::abs(z - std::complex<long double>(disc.center.real(), 0.0)) >
              static_cast<long double>(disc.radius)) {
            continue;
          }
          const auto x =
              (vectors.col(l) / vectors(static_cast<Eigen::Index>(v->pivot_index), l)).eval();
          for (std::size_t j = 0; j < 4; ++j) {
            ASSERT_TRUE(v->vector[j].contains(
                static_cast<double>(x(static_cast<Eigen::Index>(j)).real())));
          }
        }
      }
    }
  }
  EXPECT_GT(verified, 50);
}

TEST(Eigvec, ComplexPairEnclosed) {
  // Rotation-scaling block with eigenvalues 1 +- 2i.
  ispec::RectMatrix a(2, 2);
  a(0, 0) = a(1, 1) = ispec::ComplexRect(Interval(1.0));
  a(0, 1) = ispec::ComplexRect(Interval(-2.0));
  a(1, 0) = ispec::ComplexRect(Interval(2.0));
  const ispec::ComplexRect lambda(Interval(0.99, 1.01), Interval(1.99, 2.01));
  const auto v = ispec::eigvec_enclose(a, lambda);
  ASSERT_TRUE(v.ok());
  // Eigenvector (1, -i) for 1 + 2i.
  EXPECT_TRUE(v->vector[0].contains(ispec::Complex(1.0, 0.0)));
  EXPECT_TRUE(v->vector[1].contains(ispec::Complex(0.0, -1.0)));
}

TEST(Eigvec, FailsForRepeatedEigenvalue) {
  const IntervalMatrix a = IntervalMatrix::identity(3);
  const auto v = ispec::eigvec_enclose(a, Interval(0.99, 1.01));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.failure(), ispec::FailureCause::kEigvecFailed);
}

TEST(NormalizeColumn, ContainsNormalizedMembers) {
  ispec::Rng rng(52);
  for (int t = 0; t < 1000; ++t) {
    ispec::IntervalVector v(4);
    for (auto& x : v) x = Interval::from_mid_rad(rng.uniform(-1.0, 1.0), 0.01);
    v[0] = Interval(1.0);
    const ispec::IntervalVector u = ispec::normalize_column(v);
    const Eigen::VectorXd p = ispec::sample_member(v, rng, ispec::SampleMode::kVertex);
    const Eigen::Matrix<long double, Eigen::Dynamic, 1> q = p.cast<long double>().normalized();
    for (std::size_t i = 0; i < 4; ++i) {
      ASSERT_TRUE(u[i].contains(static_cast<double>(q(static_cast<Eigen::Index>(i)))));
      ASSERT_GE(u[i].lo(), -1.0);
      ASSERT_LE(u[i].hi(), 1.0);
    }
  }
}

TEST(NormalizeColumn, ZeroNormThrows) {
  EXPECT_THROW(ispec::normalize_column({Interval(-1.0, 1.0), Interval(0.0)}), std::domain_error);
}

TEST(FallbackBox, AllUnitEntries) {
  const IntervalMatrix q = ispec::fallback_unit_box(3);
  for (const Interval& x : q.entries()) EXPECT_EQ(x, Interval::unit());
}

}  // namespace
