#include "schurmzv/rational.hpp"

#include "schurmzv/errors.hpp"

namespace schurmzv {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && (c == '-' || c == '+'));
    if (!ok) throw ParseError("malformed rational literal '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r(pow(Integer(base.get_num()), exponent), pow(Integer(base.get_den()), exponent));
  r.canonicalize();
  return r;
}

Rational inverse_power(unsigned long m, unsigned long d) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), m, d);
  return Rational(Integer(1), den);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace schurmzv
