#include "rpsforge/polynomial.hpp"

#include <algorithm>

namespace rps {

namespace {

std::vector<std::vector<Interval>> to_intervals(const Polynomial2& p) {
  std::vector<std::vector<Interval>> out(p.degree_s() + 1, std::vector<Interval>(p.degree_r() + 1));
  for (const auto& [e, c] : p.terms()) out[e.second][e.first] = Interval::enclose(c);
  return out;
}

}  // namespace

Polynomial2 Polynomial2::constant(const Rational& c) {
  Polynomial2 p;
  p.add_term({0, 0}, c);
  return p;
}

Polynomial2 Polynomial2::r() {
  Polynomial2 p;
  p.add_term({1, 0}, Rational(1));
  return p;
}

Polynomial2 Polynomial2::s() {
  Polynomial2 p;
  p.add_term({0, 1}, Rational(1));
  return p;
}

Polynomial2 Polynomial2::linear_power_r(const Rational& a, const Rational& b, unsigned e) {
  Polynomial2 p;
  for (unsigned i = 0; i <= e; ++i) {
    p.add_term({i, 0}, Rational(binomial(e, i)) * power(a, e - i) * power(b, i));
  }
  return p;
}

Rational Polynomial2::coefficient(unsigned r_power, unsigned s_power) const {
  const auto it = terms_.find({r_power, s_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial2::degree_r() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

unsigned Polynomial2::degree_s() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

Rational Polynomial2::evaluate(const Rational& r, const Rational& s) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * power(r, e.first) * power(s, e.second);
  return acc;
}

Polynomial2 Polynomial2::derivative_r() const {
  Polynomial2 p;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) p.add_term({e.first - 1, e.second}, c * e.first);
  }
  return p;
}

Polynomial2 Polynomial2::derivative_s() const {
  Polynomial2 p;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) p.add_term({e.first, e.second - 1}, c * e.second);
  }
  return p;
}

void Polynomial2::add_term(Exponents e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial2& Polynomial2::operator-=(const Polynomial2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial2& Polynomial2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b) {
  Polynomial2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

IntervalPolynomial::IntervalPolynomial(const Polynomial2& p)
    : coeffs_(to_intervals(p)), d_r_(to_intervals(p.derivative_r())), d_s_(to_intervals(p.derivative_s())) {}

Interval IntervalPolynomial::horner(const std::vector<std::vector<Interval>>& coeffs, const Box& box) {
  Interval outer = Interval::point(0.0);
  for (auto j = coeffs.size(); j-- > 0;) {
    Interval inner = Interval::point(0.0);
    for (auto i = coeffs[j].size(); i-- > 0;) inner = inner * box.r + coeffs[j][i];
    outer = outer * box.s + inner;
  }
  return outer;
}

Interval IntervalPolynomial::natural(const Box& box) const { return horner(coeffs_, box); }

Interval IntervalPolynomial::enclose(const Box& box) const {
  const Interval nat = natural(box);
  const double rm = box.r.mid(), sm = box.s.mid();
  const Box centre{Interval::point(rm), Interval::point(sm)};
  const Interval mean_value = horner(coeffs_, centre) + horner(d_r_, box) * (box.r - Interval::point(rm)) +
                              horner(d_s_, box) * (box.s - Interval::point(sm));
  return intersect(nat, mean_value);
}

}  // namespace rps
