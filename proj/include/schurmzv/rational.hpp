#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace schurmzv {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Rational pow(const Rational& base, unsigned long exponent);
Integer pow(const Integer& base, unsigned long exponent);

/// 1 / m^d as an exact rational.
Rational inverse_power(unsigned long m, unsigned long d);

double to_double(const Rational& q);

}  // namespace schurmzv

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 60
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 40
  };
};

}  // namespace Eigen
