// Independent reference computations used by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <Eigen/QR>
#include <boost/multiprecision/mpfr.hpp>

#include "ispec/interval_matrix.hpp"
#include "ispec/random.hpp"

namespace oracle {

using MatrixLD = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using Quad = __float128;

/// A^k in long double by repeated multiplication.
inline MatrixLD power_ld(const ispec::PointMatrix& a, unsigned k) {
  const MatrixLD base = a.cast<long double>();
  MatrixLD p = base;
  for (unsigned i = 1; i < k; ++i) p = p * base;
  return p;
}

/// Exact-enough A^k with MPFR: about 130 bits per factor, far more than the
/// 53 k bits the exact products need.
inline bool power_inside_mpfr(const ispec::PointMatrix& a, unsigned k,
                              const ispec::IntervalMatrix& enclosure) {
  namespace mp = boost::multiprecision;
  using Big = mp::number<mp::mpfr_float_backend<0>>;
  Big::default_precision(40 * k + 80);
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<Big> base(n * n), q(n * n), next(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      base[i * n + j] = Big(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
  }
  q = base;
  for (unsigned s = 1; s < k; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Big acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += q[i * n + l] * base[l * n + j];
        next[i * n + j] = acc;
      }
    }
    std::swap(q, next);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = enclosure(i, j);
      if (q[i * n + j] < Big(e.lo()) || q[i * n + j] > Big(e.hi())) return false;
    }
  }
  return true;
}

/// Powers A^k of one sample for an ascending exponent list, checked against
/// enclosures. Entries that the long double power places inside with a
/// margin of the forward error bound 2 k (n + 1) u |A|^k are settled
/// directly; doubtful ones are decided by MPFR. k = 1 is compared exactly.
class PowerTable {
 public:
  PowerTable(const ispec::PointMatrix& a, const std::vector<unsigned>& ks) : a_(a) {
    const MatrixLD base = a.cast<long double>();
    const MatrixLD abs_base = base.cwiseAbs();
    MatrixLD p = base, q = abs_base;
    unsigned at = 1;
    for (unsigned k : ks) {
      for (; at < k; ++at) {
        p = p * base;
        q = q * abs_base;
      }
      powers_.push_back({k, p, q});
    }
  }

  bool inside(unsigned k, const ispec::IntervalMatrix& enclosure) const {
    const auto n = a_.rows();
    if (k == 1) {
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          if (!enclosure(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                   .contains(a_(i, j))) {
            return false;
          }
        }
      }
      return true;
    }
    const Entry* e = nullptr;
    for (const Entry& x : powers_) {
      if (x.k == k) e = &x;
    }
    if (e == nullptr) throw std::invalid_argument("PowerTable: exponent not tabulated");
    const long double factor = 2.0L * k * static_cast<long double>(n + 1) * std::ldexp(1.0L, -63);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto& box = enclosure(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        const long double tol = factor * e->abs_power(i, j) + 1e-4000L;
        const long double x = e->power(i, j);
        if (!(box.lo() <= x - tol && x + tol <= box.hi())) {
          ++mpfr_checks_;
          return power_inside_mpfr(a_, k, enclosure);
        }
      }
    }
    return true;
  }

  std::size_t mpfr_checks() const { return mpfr_checks_; }

 private:
  struct Entry {
    unsigned k;
    MatrixLD power;
    MatrixLD abs_power;
  };
  ispec::PointMatrix a_;
  std::vector<Entry> powers_;
  mutable std::size_t mpfr_checks_ = 0;
};

/// Whether A^k lies in `enclosure`.
inline bool power_inside(const ispec::PointMatrix& a, unsigned k,
                         const ispec::IntervalMatrix& enclosure) {
  return PowerTable(a, {k}).inside(k, enclosure);
}

/// Haar-ish random orthogonal matrix from a QR factorization.
inline ispec::PointMatrix random_orthogonal(std::size_t n, ispec::Rng& rng) {
  ispec::PointMatrix g(n, n);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.uniform(-1.0, 1.0);
  }
  Eigen::HouseholderQR<ispec::PointMatrix> qr(g);
  return qr.householderQ() * ispec::PointMatrix::Identity(g.rows(), g.cols());
}

/// Random interval with endpoints in [-scale, scale].
inline ispec::Interval random_interval(ispec::Rng& rng, double scale) {
  const double x = rng.uniform(-scale, scale);
  const double y = rng.uniform(-scale, scale);
  return {std::min(x, y), std::max(x, y)};
}

/// Hull of the solutions of 2x2 systems over all endpoint assignments of
/// (A, b). For a regular 2x2 interval matrix the hull of the solution set is
/// attained at such vertices. Cramer's rule runs in 256-bit MPFR and the
/// bounds are rounded outward to double.
struct Hull2 {
  double lo[2];
  double hi[2];
  bool regular = true;
};

inline Hull2 vertex_hull_2x2(const ispec::IntervalMatrix& a, const ispec::IntervalVector& b) {
  using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;
  Hull2 h{{INFINITY, INFINITY}, {-INFINITY, -INFINITY}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    auto pick = [&](const ispec::Interval& x, unsigned bit) {
      return Big((mask >> bit) & 1u ? x.hi() : x.lo());
    };
    const Big a00 = pick(a(0, 0), 0), a01 = pick(a(0, 1), 1);
    const Big a10 = pick(a(1, 0), 2), a11 = pick(a(1, 1), 3);
    const Big b0 = pick(b[0], 4), b1 = pick(b[1], 5);
    const Big det = a00 * a11 - a01 * a10;
    if (det == 0) {
      h.regular = false;
      return h;
    }
    const Big x[2] = {(b0 * a11 - a01 * b1) / det, (a00 * b1 - b0 * a10) / det};
    for (int i = 0; i < 2; ++i) {
      h.lo[i] = std::min(h.lo[i], mpfr_get_d(x[i].backend().data(), MPFR_RNDD));
      h.hi[i] = std::max(h.hi[i], mpfr_get_d(x[i].backend().data(), MPFR_RNDU));
    }
  }
  return h;
}

}  // namespace oracle
