#pragma once

#include <optional>
#include <string_view>

#include "ispec/interval_matrix.hpp"
#include "ispec/result.hpp"
#include "ispec/spectral_decomp.hpp"

namespace ispec {

enum class PowerMethod { kBinary, kSpectral, kWidebox, kCirculant };

std::string_view to_string(PowerMethod method);

/// Enclosure of {A^k : A in a}, or the reason it could not be computed.
struct PowerResult {
  IntervalMatrix enclosure;
  PowerMethod method = PowerMethod::kBinary;
  unsigned k = 1;
  std::optional<FailureCause> failure;

  bool ok() const { return !failure.has_value(); }
};

/// Square-and-multiply over interval matrix products; k = 1 returns a.
PowerResult power_binary(const IntervalMatrix& a, unsigned k);

/// Real part of V diag(lambda_j^k) V^-1 from a general or circulant
/// decomposition.
PowerResult power_spectral(const SpectralDecomposition& d, unsigned k);
/// Decomposes a first; decomposition failures are reported in the result.
PowerResult power_spectral(const IntervalMatrix& a, unsigned k);

/// Q diag(lambda_j^k) Q^T with the exact range of x^k on each eigenvalue
/// interval.
PowerResult power_symmetric_spectral(const SymmetricDecomposition& d, unsigned k);

/// Box with every entry [-h, h], h = sum_i mag(lambda_i)^k rounded upward.
/// Holds because |(Q L^k Q^T)_ij| <= sum_l |q_il| |q_jl| |lambda_l|^k.
PowerResult power_widebox(const IntervalVector& lambda, unsigned k);
/// Uses symmetric_eigen_bounds; their failure is reported in the result.
PowerResult power_widebox(const SymIntervalMatrix& a, unsigned k);

/// Powers of the circulant matrices with first row in c via the closed-form
/// Fourier decomposition. The result has circulant structure.
PowerResult power_circulant(const IntervalVector& c, unsigned k);
PowerResult power_circulant(const SpectralDecomposition& d, unsigned k);

}  // namespace ispec
