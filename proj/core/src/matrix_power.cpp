#include "ispec/matrix_power.hpp"

#include <stdexcept>
#include <vector>

#include "ispec/eigen_enclosure.hpp"

namespace ispec {

std::string_view to_string(PowerMethod method) {
  switch (method) {
    case PowerMethod::kBinary:
      return "binary";
    case PowerMethod::kSpectral:
      return "spectral";
    case PowerMethod::kWidebox:
      return "widebox";
    case PowerMethod::kCirculant:
      return "circulant";
  }
  return "unknown";
}

namespace {

void require_exponent(unsigned k) {
  if (k == 0) throw std::invalid_argument("matrix power: exponent must be >= 1");
}

PowerResult failed(PowerMethod method, unsigned k, FailureCause cause) {
  return {IntervalMatrix(), method, k, cause};
}

// Powers of the eigenvalue discs, kept both as discs and as rectangles.
struct DiagonalPower {
  std::vector<ComplexDisc> disc;
  std::vector<ComplexRect> rect;
};

DiagonalPower diagonal_power(const SpectralDecomposition& d, unsigned k) {
  DiagonalPower p;
  for (const ComplexDisc& lambda : d.lambda) {
    p.disc.push_back(pow(lambda, k));
    p.rect.push_back(disc_to_rect(p.disc.back()));
  }
  return p;
}

// Real part of (V diag(P) V^-1)_{il}. Each term is evaluated in rectangular
// and in disc arithmetic; both enclose it, so their intersection does too.
Interval spectral_entry(const SpectralDecomposition& d, const DiscMatrix& v_disc,
                        const DiscMatrix& v_inv_disc, const DiagonalPower& p,
                        std::size_t i, std::size_t l) {
  Interval acc(0.0);
  for (std::size_t j = 0; j < d.size(); ++j) {
    const Interval by_rect = ((d.v(i, j) * p.rect[j]) * d.v_inv(j, l)).re;
    const Interval by_disc = real_part((v_disc(i, j) * p.disc[j]) * v_inv_disc(j, l));
    acc += intersect(by_rect, by_disc);
  }
  return acc;
}

}  // namespace

PowerResult power_binary(const IntervalMatrix& a, unsigned k) {
  require_exponent(k);
  if (!a.is_square()) throw std::invalid_argument("power_binary: matrix must be square");
  std::optional<IntervalMatrix> result;
  IntervalMatrix base = a;
  for (unsigned e = k;;) {
    if (e & 1u) result = result ? *result * base : base;
    e >>= 1;
    if (e == 0) break;
    base = base * base;
  }
  return {std::move(*result), PowerMethod::kBinary, k, std::nullopt};
}

PowerResult power_spectral(const SpectralDecomposition& d, unsigned k) {
  require_exponent(k);
  const std::size_t n = d.size();
  const DiagonalPower p = diagonal_power(d, k);
  const DiscMatrix v_disc = to_disc(d.v);
  const DiscMatrix v_inv_disc = to_disc(d.v_inv);
  IntervalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      out(i, l) = spectral_entry(d, v_disc, v_inv_disc, p, i, l);
    }
  }
  return {std::move(out), PowerMethod::kSpectral, k, std::nullopt};
}

PowerResult power_spectral(const IntervalMatrix& a, unsigned k) {
  require_exponent(k);
  Result<SpectralDecomposition> d = decompose_general(a);
  if (!d) return failed(PowerMethod::kSpectral, k, d.failure());
  return power_spectral(*d, k);
}

PowerResult power_symmetric_spectral(const SymmetricDecomposition& d, unsigned k) {
  require_exponent(k);
  const std::size_t n = d.size();
  IntervalMatrix q_lambda = d.q;
  for (std::size_t j = 0; j < n; ++j) {
    const Interval pj = pow(d.lambda[j], k);
    for (std::size_t i = 0; i < n; ++i) q_lambda(i, j) = d.q(i, j) * pj;
  }
  return {q_lambda * d.q.transpose(), PowerMethod::kSpectral, k, std::nullopt};
}

PowerResult power_widebox(const IntervalVector& lambda, unsigned k) {
  require_exponent(k);
  if (lambda.empty()) throw std::invalid_argument("power_widebox: empty spectrum");
  std::vector<double> mags;
  for (const Interval& x : lambda) mags.push_back(mag(x));
  const double h = sum_pow_up(mags, k);
  const std::size_t n = lambda.size();
  return {IntervalMatrix(n, n, Interval(-h, h)), PowerMethod::kWidebox, k,
          std::nullopt};
}

PowerResult power_widebox(const SymIntervalMatrix& a, unsigned k) {
  require_exponent(k);
  Result<SymEigBounds> bounds = symmetric_eigen_bounds(a);
  if (!bounds) return failed(PowerMethod::kWidebox, k, bounds.failure());
  return power_widebox(bounds->intervals, k);
}

PowerResult power_circulant(const SpectralDecomposition& d, unsigned k) {
  require_exponent(k);
  if (d.kind != DecompositionKind::kCirculant) {
    throw std::invalid_argument("power_circulant: not a circulant decomposition");
  }
  const std::size_t n = d.size();
  const DiagonalPower p = diagonal_power(d, k);
  const DiscMatrix v_disc = to_disc(d.v);
  const DiscMatrix v_inv_disc = to_disc(d.v_inv);
  // Every member's power is circulant, so the first row determines the rest.
  IntervalVector row(n);
  for (std::size_t q = 0; q < n; ++q) {
    row[q] = spectral_entry(d, v_disc, v_inv_disc, p, 0, q);
  }
  return {circulant(row), PowerMethod::kCirculant, k, std::nullopt};
}

PowerResult power_circulant(const IntervalVector& c, unsigned k) {
  return power_circulant(decompose_circulant(c), k);
}

}  // namespace ispec
