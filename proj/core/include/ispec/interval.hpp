#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>

namespace ispec {

/// Closed real interval [lo, hi] with outward-rounded arithmetic.
///
/// Every operation returns an enclosure of the exact set-valued result;
/// point results that are representable come back as degenerate intervals.
/// Infinite endpoints only arise from overflow and are rejected by the
/// matrix-level algorithms (see is_bounded()).
class Interval {
 public:
  constexpr Interval() = default;
  // NOLINTNEXTLINE(google-explicit-constructor): points promote to intervals.
  constexpr Interval(double x) : lo_(x), hi_(x) {}
  Interval(double lo, double hi);

  static Interval from_mid_rad(double mid, double rad);
  /// [-1, 1].
  static constexpr Interval unit() { return Interval(Raw{}, -1.0, 1.0); }

  constexpr double lo() const { return lo_; }
  constexpr double hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  bool is_bounded() const;
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  /// Strict containment: other lies in the interior of *this.
  bool interior_contains(const Interval& other) const {
    return lo_ < other.lo_ && other.hi_ < hi_;
  }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  Interval operator-() const { return Interval(Raw{}, -hi_, -lo_); }
  Interval& operator+=(const Interval& b);
  Interval& operator-=(const Interval& b);
  Interval& operator*=(const Interval& b);
  Interval& operator/=(const Interval& b);

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  struct Raw {};
  constexpr Interval(Raw, double lo, double hi) : lo_(lo), hi_(hi) {}

  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws std::domain_error when b contains zero.
Interval operator/(const Interval& a, const Interval& b);

/// Midpoint, rounded to nearest.
double mid(const Interval& a);
/// Radius rounded upward so that [mid - rad, mid + rad] covers a.
double rad(const Interval& a);
/// max |x| over a.
double mag(const Interval& a);
/// min |x| over a.
double mig(const Interval& a);

/// Exact range of x^2 over a.
Interval sqr(const Interval& a);
/// Exact range of x^k over a (k >= 1), not repeated multiplication.
Interval pow(const Interval& a, unsigned k);
/// Requires a.lo() >= 0.
Interval sqrt(const Interval& a);

Interval hull(const Interval& a, const Interval& b);
/// Throws std::domain_error on an empty intersection.
Interval intersect(const Interval& a, const Interval& b);

/// Upward-rounded x^k for a nonnegative real x, at most 2 ulps above the
/// exact value away from the underflow and overflow ranges.
double pow_up(double x, unsigned k);
double pow_down(double x, unsigned k);
/// Upward-rounded sum of x_i^k over nonnegative x_i, accumulated in
/// double-double and rounded once, so it stays within 2 ulps of the exact sum
/// away from the underflow and overflow ranges.
double sum_pow_up(std::span<const double> x, unsigned k);

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace ispec
