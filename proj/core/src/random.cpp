#include "ispec/random.hpp"

#include <algorithm>

namespace ispec {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ stream));
}

double Rng::uniform_open01() {
  // (m + 1/2) / 2^53 for a 53-bit integer m: never 0, never 1.
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform_open01();
}

namespace {

double draw(const Interval& x, Rng& rng, SampleMode mode) {
  if (mode == SampleMode::kVertex) return rng.coin() ? x.hi() : x.lo();
  return std::clamp(rng.uniform(x.lo(), x.hi()), x.lo(), x.hi());
}

}  // namespace

PointMatrix sample_member(const IntervalMatrix& a, Rng& rng, SampleMode mode) {
  PointMatrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          draw(a(i, j), rng, mode);
    }
  }
  return p;
}

PointMatrix sample_symmetric_member(const SymIntervalMatrix& a, Rng& rng,
                                    SampleMode mode) {
  const auto n = static_cast<Eigen::Index>(a.size());
  PointMatrix p(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      p(i, j) = p(j, i) = draw(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                               rng, mode);
    }
  }
  return p;
}

Eigen::VectorXd sample_member(const IntervalVector& v, Rng& rng, SampleMode mode) {
  Eigen::VectorXd p(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    p(static_cast<Eigen::Index>(i)) = draw(v[i], rng, mode);
  }
  return p;
}

}  // namespace ispec
