#include "rpsforge/rational.hpp"

#include <cmath>

namespace rps {

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt power(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational power(const Rational& base, unsigned long exponent) {
  Rational out(power(BigInt(base.get_num()), exponent), power(BigInt(base.get_den()), exponent));
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite double to a rational");
  Rational q(x);
  q.canonicalize();
  return q;
}

}  // namespace rps
