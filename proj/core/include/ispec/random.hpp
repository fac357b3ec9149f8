#pragma once

#include <cstdint>
#include <random>

#include "ispec/interval_matrix.hpp"

namespace ispec {

/// Seedable generator with portable uniform draws.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard.
/// Uniform doubles are built from raw bits instead of std distributions,
/// whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent substream `stream` of `seed`, via a splitmix64 mix.
  static Rng substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform on the open interval (0, 1).
  double uniform_open01();
  /// Uniform on (lo, hi).
  double uniform(double lo, double hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// How members of an interval object are drawn.
enum class SampleMode { kVertex, kInterior };

/// Point member of a: each entry an endpoint (kVertex) or uniform inside.
PointMatrix sample_member(const IntervalMatrix& a, Rng& rng, SampleMode mode);
/// Symmetric member of a symmetric interval matrix.
PointMatrix sample_symmetric_member(const SymIntervalMatrix& a, Rng& rng,
                                    SampleMode mode);
Eigen::VectorXd sample_member(const IntervalVector& v, Rng& rng, SampleMode mode);

}  // namespace ispec
