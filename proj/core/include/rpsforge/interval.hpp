#pragma once

// Closed intervals with double (dyadic) endpoints. Every operation widens its
// round-to-nearest result by one ulp on each side, so results enclose the
// exact real result regardless of the FPU rounding mode in effect.

#include "rpsforge/rational.hpp"

#include <string>

namespace rps {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double x) { return {x, x}; }
  /// Smallest double interval containing q, widened by one ulp.
  static Interval enclose(const Rational& q);

  double width() const { return hi - lo; }
  double mid() const { return lo + 0.5 * (hi - lo); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Rational& q) const;
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
  bool strictly_negative() const { return hi < 0.0; }
  bool strictly_positive() const { return lo > 0.0; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);

/// Intersection; callers must know the operands overlap.
Interval intersect(const Interval& a, const Interval& b);

std::string to_string(const Interval& x);

}  // namespace rps
