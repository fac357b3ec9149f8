#pragma once

// Directed rounding without touching the FPU control word.
//
// Every routine evaluates the operation in round-to-nearest, recovers the
// exact rounding error with an error-free transformation (TwoSum, FMA), and
// steps one ulp outward only when the rounded result is inexact in that
// direction. Exact results therefore stay exact. Near the underflow
// threshold the error terms are no longer exact, so both directions are
// widened unconditionally there.

#include <cmath>
#include <limits>

namespace ispec::rounding {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kMax = std::numeric_limits<double>::max();

// Below this magnitude FMA residuals may themselves be rounded.
inline constexpr double kTiny = 0x1p-960;

inline double next_down(double x) { return std::nextafter(x, -kInf); }
inline double next_up(double x) { return std::nextafter(x, kInf); }

namespace detail {

// Exact error of s = fl(a + b), i.e. (a + b) - s.
inline double two_sum_error(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

// Overflowed results: a finite true value that rounded to +-inf.
inline double clamp_down(double s, bool finite_inputs) {
  return (finite_inputs && s == kInf) ? kMax : s;
}
inline double clamp_up(double s, bool finite_inputs) {
  return (finite_inputs && s == -kInf) ? -kMax : s;
}

}  // namespace detail

inline double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    return detail::clamp_down(s, std::isfinite(a) && std::isfinite(b));
  }
  return detail::two_sum_error(a, b, s) < 0.0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    return detail::clamp_up(s, std::isfinite(a) && std::isfinite(b));
  }
  return detail::two_sum_error(a, b, s) > 0.0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    return detail::clamp_down(p, std::isfinite(a) && std::isfinite(b));
  }
  if (std::fabs(p) < kTiny) return next_down(p);
  return std::fma(a, b, -p) < 0.0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double p = a * b;
  if (!std::isfinite(p)) {
    return detail::clamp_up(p, std::isfinite(a) && std::isfinite(b));
  }
  if (std::fabs(p) < kTiny) return next_up(p);
  return std::fma(a, b, -p) > 0.0 ? next_up(p) : p;
}

// The sign of (a/b - q) equals sign(a - q*b) * sign(b).
inline double div_down(double a, double b) {
  if (a == 0.0 && b != 0.0) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) {
    return detail::clamp_down(q, std::isfinite(a) && std::isfinite(b));
  }
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_down(q);
  const double r = std::fma(-q, b, a);
  return (b > 0.0 ? r < 0.0 : r > 0.0) ? next_down(q) : q;
}

inline double div_up(double a, double b) {
  if (a == 0.0 && b != 0.0) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) {
    return detail::clamp_up(q, std::isfinite(a) && std::isfinite(b));
  }
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_up(q);
  const double r = std::fma(-q, b, a);
  return (b > 0.0 ? r > 0.0 : r < 0.0) ? next_up(q) : q;
}

// Both require x >= 0.
inline double sqrt_down(double x) {
  if (x == 0.0 || x == kInf) return x;
  const double s = std::sqrt(x);
  if (x < kTiny) return next_down(s);
  return std::fma(-s, s, x) < 0.0 ? next_down(s) : s;
}

inline double sqrt_up(double x) {
  if (x == 0.0 || x == kInf) return x;
  const double s = std::sqrt(x);
  if (x < kTiny) return next_up(s);
  return std::fma(-s, s, x) > 0.0 ? next_up(s) : s;
}

// Upper bound of sqrt(x^2 + y^2).
inline double hypot_up(double x, double y) {
  return sqrt_up(add_up(mul_up(x, x), mul_up(y, y)));
}

// Lower bound of sqrt(x^2 + y^2).
inline double hypot_down(double x, double y) {
  return sqrt_down(add_down(mul_down(x, x), mul_down(y, y)));
}

}  // namespace ispec::rounding
