#pragma once

#include <complex>
#include <iosfwd>

#include "ispec/interval.hpp"

namespace ispec {

using Complex = std::complex<double>;

/// Rectangular complex interval {a + ib : a in re, b in im}.
struct ComplexRect {
  Interval re;
  Interval im;

  constexpr ComplexRect() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr ComplexRect(Interval r) : re(r) {}
  constexpr ComplexRect(Interval r, Interval i) : re(r), im(i) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  ComplexRect(Complex z) : re(z.real()), im(z.imag()) {}

  bool contains(Complex z) const {
    return re.contains(z.real()) && im.contains(z.imag());
  }
  bool contains(const ComplexRect& o) const {
    return re.contains(o.re) && im.contains(o.im);
  }
  bool is_real() const { return im == Interval(0.0); }

  ComplexRect& operator+=(const ComplexRect& b);
  ComplexRect& operator-=(const ComplexRect& b);

  friend bool operator==(const ComplexRect&, const ComplexRect&) = default;
};

ComplexRect operator+(const ComplexRect& a, const ComplexRect& b);
ComplexRect operator-(const ComplexRect& a, const ComplexRect& b);
ComplexRect operator-(const ComplexRect& a);
ComplexRect operator*(const ComplexRect& a, const ComplexRect& b);
ComplexRect conj(const ComplexRect& a);
/// Upper bound of |z| over the rectangle.
double mag(const ComplexRect& a);
/// Lower bound of |z| over the rectangle.
double mig(const ComplexRect& a);
Complex mid(const ComplexRect& a);
ComplexRect intersect(const ComplexRect& a, const ComplexRect& b);

/// Circular complex interval <c, r> = {z : |z - c| <= r}.
struct ComplexDisc {
  Complex center;
  double radius = 0.0;

  ComplexDisc() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  ComplexDisc(Complex c) : center(c) {}
  ComplexDisc(Complex c, double r);

  /// Membership with an outward-rounded distance test.
  bool contains(Complex z) const;

  friend bool operator==(const ComplexDisc&, const ComplexDisc&) = default;
};

ComplexDisc operator+(const ComplexDisc& a, const ComplexDisc& b);
ComplexDisc operator-(const ComplexDisc& a, const ComplexDisc& b);
/// Centered product <c1 c2, |c1| r2 + |c2| r1 + r1 r2>.
ComplexDisc operator*(const ComplexDisc& a, const ComplexDisc& b);
ComplexDisc conj(const ComplexDisc& a);
/// Binary exponentiation over disc multiplication; k >= 1.
ComplexDisc pow(const ComplexDisc& a, unsigned k);
double mag(const ComplexDisc& a);

/// Bounding square [Re c - r, Re c + r] + i[Im c - r, Im c + r].
ComplexRect disc_to_rect(const ComplexDisc& a);
/// Circumscribed disc: center at the midpoints, radius the half-diagonal.
ComplexDisc rect_to_disc(const ComplexRect& a);

/// Real part of a disc as a real interval.
Interval real_part(const ComplexDisc& a);

std::ostream& operator<<(std::ostream& os, const ComplexRect& a);
std::ostream& operator<<(std::ostream& os, const ComplexDisc& a);

}  // namespace ispec
