#include "rpsforge/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rps {

namespace {

double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

}  // namespace

Interval Interval::enclose(const Rational& q) {
  // get_d truncates toward zero, so the true value lies within one ulp of it.
  const double d = q.get_d();
  return {down(d), up(d)};
}

bool Interval::contains(const Rational& q) const { return from_double(lo) <= q && q <= from_double(hi); }

Interval operator+(const Interval& a, const Interval& b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval operator-(const Interval& a, const Interval& b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
  return {down(*lo), up(*hi)};
}

Interval intersect(const Interval& a, const Interval& b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

std::string to_string(const Interval& x) {
  std::ostringstream os;
  os.precision(17);
  os << '[' << x.lo << ", " << x.hi << ']';
  return os.str();
}

}  // namespace rps
