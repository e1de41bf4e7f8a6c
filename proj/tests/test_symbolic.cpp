#include <doctest.h>

#include <Eigen/LU>
#include <cmath>
#include <numbers>

#include "schurmzv/errors.hpp"
#include "schurmzv/symbolic.hpp"

using namespace schurmzv;

namespace {

constexpr double kPi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi;

/// B_n from sum_{k<=n} C(n+1, k) B_k = 0, with B_1 = -1/2.
std::vector<Rational> bernoulli_oracle(int n) {
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    Rational s(0);
    for (int k = 0; k < m; ++k) s += Rational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(k))) * b[static_cast<std::size_t>(k)];
    Rational bm = -s / (m + 1);
    bm.canonicalize();
    b.push_back(bm);
  }
  return b;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  CHECK(bernoulli_number(7) == 0);
  const auto oracle = bernoulli_oracle(40);
  for (int k = 0; k <= 40; ++k) CHECK(bernoulli_number(k) == oracle[static_cast<std::size_t>(k)]);
}

TEST_CASE("Bernoulli polynomials") {
  const GaussianRational x{Rational(1, 3), Rational(-2, 5)};
  // B_2(x) = x^2 - x + 1/6
  const GaussianRational expected = x * x - x + GaussianRational{Rational(1, 6), Rational(0)};
  CHECK(bernoulli_poly(2, x) == expected);
  // B_k(x + 1) - B_k(x) = k x^{k-1}
  for (int k = 1; k <= 12; ++k) {
    const GaussianRational diff = bernoulli_poly(k, x + GaussianRational{Rational(1), Rational(0)}) - bernoulli_poly(k, x);
    GaussianRational rhs{Rational(k), Rational(0)};
    for (int j = 0; j < k - 1; ++j) rhs *= x;
    CHECK(diff == rhs);
  }
}

TEST_CASE("even zeta values") {
  CHECK(even_zeta_pi4_coefficient(1) == Rational(1, 90));
  CHECK(even_zeta_pi4_coefficient(2) == Rational(1, 9450));
  CHECK(zeta_single(1) == ZetaSymbolValue::T());
  CHECK(zeta_single(3) == ZetaSymbolValue::Z(3));
  CHECK(zeta_single(8) == ZetaSymbolValue::P(2) * Rational(1, 9450));
  CHECK_THROWS_AS(zeta_single(2), PreconditionError);
  CHECK_THROWS_AS(zeta_single(6), PreconditionError);
  CHECK_THROWS_AS(ZetaSymbolValue::Z(4), PreconditionError);
}

TEST_CASE("powers of zeta(4)") {
  CHECK(z4_power(0) == 1);
  CHECK(z4_power(1) == Rational(1, 90));
  CHECK(z4_power(2) == Rational(1, 113400));
  CHECK(z4_star_power(1) == Rational(1, 90));
  CHECK(z4_star_power(2) == z4_power(2) + even_zeta_pi4_coefficient(2));
  MzvEvaluator eval;
  CHECK(to_double(z4_power(2)) * kPi4 * kPi4 == doctest::Approx(eval({4, 4})).epsilon(1e-13));
  CHECK(to_double(z4_power(3)) * std::pow(kPi4, 3) == doctest::Approx(eval({4, 4, 4})).epsilon(1e-13));
  const double star3 = eval({4, 4, 4}) + eval({8, 4}) + eval({4, 8}) + eval({12});
  CHECK(to_double(z4_star_power(3)) * std::pow(kPi4, 3) == doctest::Approx(star3).epsilon(1e-13));
  // Z4(-t) Z4*(t) = 1
  for (int n = 1; n <= 8; ++n) {
    Rational s(0);
    for (int j = 0; j <= n; ++j) s += (j % 2 == 0 ? 1 : -1) * z4_power(j) * z4_star_power(n - j);
    CHECK(s == 0);
  }
  for (int n = 1; n <= 6; ++n) CHECK(z4_star_power(n) * factorial(static_cast<unsigned long>(4 * n)) == 4 * z4_star_bernoulli_sum(n));
}

TEST_CASE("symbol ring") {
  const ZetaSymbolValue p = ZetaSymbolValue::P(), t = ZetaSymbolValue::T(), z3 = ZetaSymbolValue::Z(3);
  const ZetaSymbolValue sq = (p + t) * (p + t);
  CHECK(sq == p * p + ZetaSymbolValue(2) * p * t + t * t);
  CHECK(sq.t_degree() == 2);
  CHECK((sq - sq).is_zero());
  CHECK(z3 * z3 == power(z3, 2));
  CHECK((z3 * p).is_homogeneous(7));
  CHECK_FALSE(sq.is_homogeneous(8));
  CHECK(sq.weights() == std::set<int>{2, 5, 8});
  CHECK(sq.generators() == std::set<int>{kGenP, kGenT});
  CHECK((-z3).coefficient({{3, 1}}) == -1);
  CHECK(to_string(ZetaSymbolValue(0)) == "0");
  MzvEvaluator eval;
  CHECK((z3 * p + t).numeric(0.5, eval) == doctest::Approx(1.2020569031595942854 * kPi4 + 0.5));
}

TEST_CASE("symbolic determinant") {
  Matrix<ZetaSymbolValue> m(3, 3);
  const ZetaSymbolValue p = ZetaSymbolValue::P(), t = ZetaSymbolValue::T(), z3 = ZetaSymbolValue::Z(3);
  m << z3, p, ZetaSymbolValue(1), t, z3 * z3, ZetaSymbolValue(0), ZetaSymbolValue(Rational(1, 2)), t, p;
  MzvEvaluator eval;
  const double tv = 0.3;
  Eigen::Matrix3d md;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) md(i, j) = m(i, j).numeric(tv, eval);
  CHECK(determinant(m).numeric(tv, eval) == doctest::Approx(md.determinant()).epsilon(1e-12));
}
