#pragma once

#include <map>
#include <set>
#include <string>

#include "schurmzv/determinant.hpp"
#include "schurmzv/mzv.hpp"
#include "schurmzv/rational.hpp"

namespace schurmzv {

/// Generator ids of Q[P, T, Z_3, Z_5, ...]: P stands for pi^4, T for the
/// regularisation variable and an odd k >= 3 for zeta(k).
inline constexpr int kGenP = 0;
inline constexpr int kGenT = 1;

/// Generator id -> positive exponent.
using Monomial = std::map<int, int>;

int weight(const Monomial& m);
std::string to_string(const Monomial& m);

/// Element of the free commutative ring Q[P, T, Z_3, Z_5, ...].
class ZetaSymbolValue {
 public:
  ZetaSymbolValue() = default;
  ZetaSymbolValue(int c);  // NOLINT(google-explicit-constructor)
  ZetaSymbolValue(const Rational& c);  // NOLINT(google-explicit-constructor)

  static ZetaSymbolValue P(int power = 1);
  static ZetaSymbolValue T();
  /// zeta(k) as the generator Z_k; k must be odd and >= 3.
  static ZetaSymbolValue Z(int k);
  static ZetaSymbolValue term(const Monomial& m, const Rational& c);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Generator ids that occur with positive exponent.
  std::set<int> generators() const;
  std::set<int> weights() const;
  /// True when every monomial has weight w (the zero element qualifies).
  bool is_homogeneous(int w) const;
  int t_degree() const;

  /// Substitutes pi^4, numeric zeta(k) and T = t.
  double numeric(double t, MzvEvaluator& eval) const;

  ZetaSymbolValue& operator+=(const ZetaSymbolValue& o);
  ZetaSymbolValue& operator-=(const ZetaSymbolValue& o);
  ZetaSymbolValue& operator*=(const ZetaSymbolValue& o);
  friend ZetaSymbolValue operator+(ZetaSymbolValue a, const ZetaSymbolValue& b) { return a += b; }
  friend ZetaSymbolValue operator-(ZetaSymbolValue a, const ZetaSymbolValue& b) { return a -= b; }
  friend ZetaSymbolValue operator*(const ZetaSymbolValue& a, const ZetaSymbolValue& b) {
    ZetaSymbolValue r = a;
    return r *= b;
  }
  ZetaSymbolValue operator-() const;

  bool operator==(const ZetaSymbolValue&) const = default;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// "1/32*z3*z5*z11 + 17/90720*pi^8"; zero prints as "0".
std::string to_string(const ZetaSymbolValue& v);

ZetaSymbolValue power(const ZetaSymbolValue& v, int n);

/// zeta(k) in the ring: T for k = 1, Z_k for odd k, a rational multiple of
/// P^{k/4} when 4 | k. Other even k have no image and throw PreconditionError.
ZetaSymbolValue zeta_single(int k);

/// zeta(4q) / pi^{4q}.
Rational even_zeta_pi4_coefficient(int q);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational conj() const { return {re, Rational(-im)}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  bool operator==(const GaussianRational&) const = default;
};

std::string to_string(const GaussianRational& z);

/// B_k with B_1 = -1/2. Cached; safe to call from several threads.
Rational bernoulli_number(int k);
/// B_k(x) = sum_j C(k, j) B_j x^{k-j}.
GaussianRational bernoulli_poly(int k, const GaussianRational& x);

/// zeta({4}^n) = z4_power(n) * pi^{4n}.
Rational z4_power(int n);
/// sum_{j=0}^{2n} (-1)^j (1 - 2^{2j-1}) (1 - 2^{4n-2j-1}) C(4n, 2j) B_{2j} B_{4n-2j}
Rational z4_star_bernoulli_sum(int n);
/// zeta*({4}^n) = z4_star_power(n) * pi^{4n} = 4 / (4n)! * z4_star_bernoulli_sum(n).
Rational z4_star_power(int n);

/// Cofactor determinant over the symbol ring.
ZetaSymbolValue determinant(const Matrix<ZetaSymbolValue>& m);

}  // namespace schurmzv

namespace Eigen {

template <>
struct NumTraits<schurmzv::ZetaSymbolValue> : GenericNumTraits<schurmzv::ZetaSymbolValue> {
  using Real = schurmzv::ZetaSymbolValue;
  using NonInteger = schurmzv::ZetaSymbolValue;
  using Nested = schurmzv::ZetaSymbolValue;
  using Literal = schurmzv::ZetaSymbolValue;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 400
  };
};

}  // namespace Eigen
