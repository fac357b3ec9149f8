#include "ispec/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ispec/rounding.hpp"

namespace ispec {

namespace r = rounding;

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw std::invalid_argument("Interval: requires lo <= hi and no NaN");
  }
}

Interval Interval::from_mid_rad(double mid, double rad) {
  if (!(rad >= 0.0)) throw std::invalid_argument("Interval: negative radius");
  return Interval(r::sub_down(mid, rad), r::add_up(mid, rad));
}

bool Interval::is_bounded() const {
  return std::isfinite(lo_) && std::isfinite(hi_);
}

Interval& Interval::operator+=(const Interval& b) { return *this = *this + b; }
Interval& Interval::operator-=(const Interval& b) { return *this = *this - b; }
Interval& Interval::operator*=(const Interval& b) { return *this = *this * b; }
Interval& Interval::operator/=(const Interval& b) { return *this = *this / b; }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(r::add_down(a.lo(), b.lo()), r::add_up(a.hi(), b.hi()));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(r::sub_down(a.lo(), b.hi()), r::sub_up(a.hi(), b.lo()));
}

Interval operator*(const Interval& a, const Interval& b) {
  const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  // Sign-case dispatch keeps the common cases at two products.
  if (al >= 0.0) {
    if (bl >= 0.0) return {r::mul_down(al, bl), r::mul_up(ah, bh)};
    if (bh <= 0.0) return {r::mul_down(ah, bl), r::mul_up(al, bh)};
    return {r::mul_down(ah, bl), r::mul_up(ah, bh)};
  }
  if (ah <= 0.0) {
    if (bl >= 0.0) return {r::mul_down(al, bh), r::mul_up(ah, bl)};
    if (bh <= 0.0) return {r::mul_down(ah, bh), r::mul_up(al, bl)};
    return {r::mul_down(al, bh), r::mul_up(al, bl)};
  }
  if (bl >= 0.0) return {r::mul_down(al, bh), r::mul_up(ah, bh)};
  if (bh <= 0.0) return {r::mul_down(ah, bl), r::mul_up(al, bl)};
  return {std::min(r::mul_down(al, bh), r::mul_down(ah, bl)),
          std::max(r::mul_up(al, bl), r::mul_up(ah, bh))};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw std::domain_error("Interval division by an interval containing 0");
  }
  const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  if (bl > 0.0) {
    if (al >= 0.0) return {r::div_down(al, bh), r::div_up(ah, bl)};
    if (ah <= 0.0) return {r::div_down(al, bl), r::div_up(ah, bh)};
    return {r::div_down(al, bl), r::div_up(ah, bl)};
  }
  if (al >= 0.0) return {r::div_down(ah, bh), r::div_up(al, bl)};
  if (ah <= 0.0) return {r::div_down(ah, bl), r::div_up(al, bh)};
  return {r::div_down(ah, bh), r::div_up(al, bh)};
}

double mid(const Interval& a) {
  if (a.lo() == a.hi()) return a.lo();
  return 0.5 * a.lo() + 0.5 * a.hi();
}

double rad(const Interval& a) {
  const double m = mid(a);
  return std::max(r::sub_up(m, a.lo()), r::sub_up(a.hi(), m));
}

double mag(const Interval& a) {
  return std::max(std::fabs(a.lo()), std::fabs(a.hi()));
}

double mig(const Interval& a) {
  if (a.contains_zero()) return 0.0;
  return std::min(std::fabs(a.lo()), std::fabs(a.hi()));
}

namespace {

// Unevaluated sum hi + lo. Products and same-sign sums below carry a
// relative error under 16 u^2 = 2^-102 each (u = 2^-53), provided nothing
// underflows; callers check that through `tiny`.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble fast_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble dd_mul(DoubleDouble x, DoubleDouble y) {
  const double p = x.hi * y.hi;
  const double e = std::fma(x.hi, y.hi, -p);
  return fast_two_sum(p, e + (x.hi * y.lo + x.lo * y.hi));
}

DoubleDouble dd_add(DoubleDouble x, DoubleDouble y) {
  const double s = x.hi + y.hi;
  const double bb = s - x.hi;
  const double e = (x.hi - (s - bb)) + (y.hi - bb);
  return fast_two_sum(s, e + (x.lo + y.lo));
}

// A zero hi may be an underflow, so it is never usable.
bool dd_usable(DoubleDouble x) {
  return std::isfinite(x.hi) && std::fabs(x.hi) >= 0x1p-900 && std::fabs(x.hi) <= 0x1p900;
}

// x^k for x >= 0, counting operations into `ops`.
DoubleDouble dd_pow(double x, unsigned k, unsigned& ops, bool& ok) {
  if (x == 0.0) {
    ok = true;
    return {};
  }
  DoubleDouble result{1.0, 0.0};
  DoubleDouble base{x, 0.0};
  ok = dd_usable(base);
  while (k != 0 && ok) {
    if (k & 1U) {
      result = dd_mul(result, base);
      ++ops;
      ok = ok && dd_usable(result);
    }
    k >>= 1U;
    if (k != 0) {
      base = dd_mul(base, base);
      ++ops;
      ok = ok && dd_usable(base);
    }
  }
  return result;
}

// Bound on |exact - (hi + lo)| after `ops` operations of relative error
// 2^-102 each, rounded upward with room to spare.
double dd_error(DoubleDouble v, unsigned ops) {
  return r::mul_up(std::fabs(v.hi), static_cast<double>(ops) * 0x1p-100);
}

double pow_up_direct(double x, unsigned k) {
  double result = 1.0;
  double base = x;
  while (k != 0) {
    if (k & 1U) result = r::mul_up(result, base);
    k >>= 1U;
    if (k != 0) base = r::mul_up(base, base);
  }
  return result;
}

double pow_down_direct(double x, unsigned k) {
  double result = 1.0;
  double base = x;
  while (k != 0) {
    if (k & 1U) result = r::mul_down(result, base);
    k >>= 1U;
    if (k != 0) base = r::mul_down(base, base);
  }
  return std::max(result, 0.0);  // x >= 0; tiny products may step below 0
}

}  // namespace

double pow_up(double x, unsigned k) {
  const double xs[] = {x};
  return sum_pow_up(xs, k);
}

double pow_down(double x, unsigned k) {
  if (k == 0) return 1.0;
  const double direct = pow_down_direct(x, k);
  if (direct == pow_up_direct(x, k)) return direct;  // exact
  unsigned ops = 0;
  bool ok = true;
  const DoubleDouble p = dd_pow(x, k, ops, ok);
  if (!ok) return direct;
  return std::max(direct, r::add_down(p.hi, r::sub_down(p.lo, dd_error(p, ops))));
}

double sum_pow_up(std::span<const double> x, unsigned k) {
  if (k == 0) return static_cast<double>(x.size());
  double direct_up = 0.0, direct_down = 0.0;
  for (double xi : x) {
    if (xi < 0.0) throw std::invalid_argument("sum_pow_up: negative base");
    direct_up = r::add_up(direct_up, pow_up_direct(xi, k));
    direct_down = r::add_down(direct_down, pow_down_direct(xi, k));
  }
  if (direct_up == direct_down) return direct_up;  // exact

  DoubleDouble sum;
  unsigned ops = 0;
  // Terms outside the double-double range, bounded directly.
  double rest = 0.0;
  for (double xi : x) {
    bool ok = true;
    unsigned term_ops = 0;
    const DoubleDouble p = dd_pow(xi, k, term_ops, ok);
    if (ok && p.hi == 0.0) continue;  // exact zero
    const DoubleDouble next = dd_add(sum, p);
    if (ok && dd_usable(next)) {
      sum = next;
      ops += term_ops + 1;
    } else {
      rest = r::add_up(rest, pow_up_direct(xi, k));
    }
  }
  const double dd_up =
      r::add_up(sum.hi, r::add_up(sum.lo, r::add_up(dd_error(sum, ops), rest)));
  return std::min(direct_up, dd_up);
}

Interval sqr(const Interval& a) { return pow(a, 2); }

Interval pow(const Interval& a, unsigned k) {
  if (k == 0) return Interval(1.0);
  if (k == 1) return a;
  const double lo = a.lo(), hi = a.hi();
  if (k % 2 == 1) {
    // Monotone increasing.
    const double l = lo >= 0.0 ? pow_down(lo, k) : -pow_up(-lo, k);
    const double h = hi >= 0.0 ? pow_up(hi, k) : -pow_down(-hi, k);
    return {l, h};
  }
  return {pow_down(mig(a), k), pow_up(mag(a), k)};
}

Interval sqrt(const Interval& a) {
  if (a.lo() < 0.0) throw std::domain_error("Interval sqrt of negative values");
  return {r::sqrt_down(a.lo()), r::sqrt_up(a.hi())};
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) throw std::domain_error("Interval intersection is empty");
  return {lo, hi};
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << '[' << a.lo() << ", " << a.hi() << ']';
}

}  // namespace ispec
