#include "ispec/complex_interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ispec/rounding.hpp"

namespace ispec {

namespace r = rounding;

ComplexRect& ComplexRect::operator+=(const ComplexRect& b) {
  return *this = *this + b;
}
ComplexRect& ComplexRect::operator-=(const ComplexRect& b) {
  return *this = *this - b;
}

ComplexRect operator+(const ComplexRect& a, const ComplexRect& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexRect operator-(const ComplexRect& a, const ComplexRect& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexRect operator-(const ComplexRect& a) { return {-a.re, -a.im}; }

ComplexRect operator*(const ComplexRect& a, const ComplexRect& b) {
  if (a.is_real() && b.is_real()) return {a.re * b.re, Interval(0.0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexRect conj(const ComplexRect& a) { return {a.re, -a.im}; }

double mag(const ComplexRect& a) { return r::hypot_up(mag(a.re), mag(a.im)); }

double mig(const ComplexRect& a) {
  return r::hypot_down(mig(a.re), mig(a.im));
}

Complex mid(const ComplexRect& a) { return {mid(a.re), mid(a.im)}; }

ComplexRect intersect(const ComplexRect& a, const ComplexRect& b) {
  return {intersect(a.re, b.re), intersect(a.im, b.im)};
}

ComplexDisc::ComplexDisc(Complex c, double r) : center(c), radius(r) {
  if (!(r >= 0.0)) throw std::invalid_argument("ComplexDisc: negative radius");
}

bool ComplexDisc::contains(Complex z) const {
  const Interval dx = Interval(z.real()) - Interval(center.real());
  const Interval dy = Interval(z.imag()) - Interval(center.imag());
  return r::hypot_down(mig(dx), mig(dy)) <= radius;
}

namespace {

// Encloses an exactly computed center by a float center plus slack.
ComplexDisc recenter(const ComplexRect& exact, double radius) {
  const Complex c = mid(exact);
  const double slack = r::hypot_up(rad(exact.re), rad(exact.im));
  return {c, r::add_up(radius, slack)};
}

ComplexRect point_rect(Complex z) { return ComplexRect(z); }

}  // namespace

ComplexDisc operator+(const ComplexDisc& a, const ComplexDisc& b) {
  return recenter(point_rect(a.center) + point_rect(b.center),
                  r::add_up(a.radius, b.radius));
}

ComplexDisc operator-(const ComplexDisc& a, const ComplexDisc& b) {
  return recenter(point_rect(a.center) - point_rect(b.center),
                  r::add_up(a.radius, b.radius));
}

ComplexDisc operator*(const ComplexDisc& a, const ComplexDisc& b) {
  const double ma = r::hypot_up(a.center.real(), a.center.imag());
  const double mb = r::hypot_up(b.center.real(), b.center.imag());
  const double radius =
      r::add_up(r::add_up(r::mul_up(ma, b.radius), r::mul_up(mb, a.radius)),
                r::mul_up(a.radius, b.radius));
  return recenter(point_rect(a.center) * point_rect(b.center), radius);
}

ComplexDisc conj(const ComplexDisc& a) {
  return {std::conj(a.center), a.radius};
}

ComplexDisc pow(const ComplexDisc& a, unsigned k) {
  if (k == 0) throw std::invalid_argument("disc pow: exponent must be >= 1");
  ComplexDisc result;
  bool have_result = false;
  ComplexDisc base = a;
  while (k != 0) {
    if (k & 1U) {
      result = have_result ? result * base : base;
      have_result = true;
    }
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

double mag(const ComplexDisc& a) {
  return r::add_up(r::hypot_up(a.center.real(), a.center.imag()), a.radius);
}

ComplexRect disc_to_rect(const ComplexDisc& a) {
  return {Interval::from_mid_rad(a.center.real(), a.radius),
          Interval::from_mid_rad(a.center.imag(), a.radius)};
}

ComplexDisc rect_to_disc(const ComplexRect& a) {
  return {mid(a), r::hypot_up(rad(a.re), rad(a.im))};
}

Interval real_part(const ComplexDisc& a) {
  return Interval::from_mid_rad(a.center.real(), a.radius);
}

std::ostream& operator<<(std::ostream& os, const ComplexRect& a) {
  return os << a.re << " + i" << a.im;
}

std::ostream& operator<<(std::ostream& os, const ComplexDisc& a) {
  return os << '<' << a.center << ", " << a.radius << '>';
}

}  // namespace ispec
