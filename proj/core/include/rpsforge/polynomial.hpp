#pragma once

// Exact polynomials in two variables (r, s) and their interval enclosures.

#include "rpsforge/interval.hpp"
#include "rpsforge/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace rps {

class Polynomial2 {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (power of r, power of s)

  Polynomial2() = default;
  static Polynomial2 constant(const Rational& c);
  static Polynomial2 r();
  static Polynomial2 s();
  /// (a + b r)^e, expanded.
  static Polynomial2 linear_power_r(const Rational& a, const Rational& b, unsigned e);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coefficient(unsigned r_power, unsigned s_power) const;
  unsigned degree_r() const;
  unsigned degree_s() const;
  bool is_zero() const { return terms_.empty(); }

  Rational evaluate(const Rational& r, const Rational& s) const;
  Polynomial2 derivative_r() const;
  Polynomial2 derivative_s() const;

  Polynomial2& operator+=(const Polynomial2& o);
  Polynomial2& operator-=(const Polynomial2& o);
  Polynomial2& operator*=(const Rational& c);

  friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) { return a += b; }
  friend Polynomial2 operator-(Polynomial2 a, const Polynomial2& b) { return a -= b; }
  friend Polynomial2 operator*(Polynomial2 a, const Rational& c) { return a *= c; }
  friend Polynomial2 operator*(const Rational& c, Polynomial2 a) { return a *= c; }
  friend Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b);
  friend bool operator==(const Polynomial2&, const Polynomial2&) = default;

 private:
  void add_term(Exponents e, const Rational& c);

  std::map<Exponents, Rational> terms_;  // no zero coefficients
};

struct Box {
  Interval r;
  Interval s;
};

/// Interval evaluation of a Polynomial2 with outward-rounded coefficients.
class IntervalPolynomial {
 public:
  explicit IntervalPolynomial(const Polynomial2& p);

  /// Nested Horner form: r inside, s outside.
  Interval natural(const Box& box) const;
  /// Natural form intersected with the mean-value form about the box centre.
  Interval enclose(const Box& box) const;

 private:
  // coeffs_[j][i] encloses the coefficient of r^i s^j.
  static Interval horner(const std::vector<std::vector<Interval>>& coeffs, const Box& box);

  std::vector<std::vector<Interval>> coeffs_;
  std::vector<std::vector<Interval>> d_r_;
  std::vector<std::vector<Interval>> d_s_;
};

}  // namespace rps
