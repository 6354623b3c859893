#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rps {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// num/den in lowest terms; throws DomainError when den is zero.
Rational ratio(const BigInt& num, const BigInt& den);

BigInt binomial(unsigned long n, unsigned long k);
BigInt power(const BigInt& base, unsigned long exponent);
Rational power(const Rational& base, unsigned long exponent);

/// Canonical "p/q" (or "p" for integers) form.
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double x);

}  // namespace rps
