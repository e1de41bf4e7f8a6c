#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "schurmzv/stuffle.hpp"
#include "schurmzv/text_format.hpp"

using namespace schurmzv;

TEST_CASE("stuffle golden products") {
  const QSElement p = stuffle_product({1}, {1});
  CHECK(p.terms().size() == 2);
  CHECK(p.coefficient({1, 1}) == 2);
  CHECK(p.coefficient({2}) == 1);

  const QSElement q = stuffle_product({2}, {1, 3});
  QSElement expected;
  expected.add({2, 1, 3}, 1);
  expected.add({1, 2, 3}, 1);
  expected.add({1, 3, 2}, 1);
  expected.add({3, 3}, 1);
  expected.add({1, 5}, 1);
  CHECK(q == expected);

  CHECK(stuffle_product({}, {4, 1}) == QSElement({4, 1}));
  CHECK((QSElement::unit() * QSElement({2})) == QSElement({2}));
}

TEST_CASE("stuffle is commutative and associative") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const MzvIndex u = testgen::random_index(rng, 4), v = testgen::random_index(rng, 4), w = testgen::random_index(rng, 3);
    CHECK(stuffle_product(u, v) == stuffle_product(v, u));
    CHECK((QSElement(u) * stuffle_product(v, w)) == (stuffle_product(u, v) * QSElement(w)));
  }
}

TEST_CASE("property: truncated sums respect the stuffle") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    const MzvIndex u = testgen::random_index(rng, 5), v = testgen::random_index(rng, 5);
    const int M = std::uniform_int_distribution<int>(1, 9)(rng);
    CHECK(testgen::brute_force_mzv(u, M) * testgen::brute_force_mzv(v, M) ==
          truncated_value(stuffle_product(u, v), M));
  }
}

TEST_CASE("regularisation golden values") {
  CHECK(regularize(MzvIndex{1}) == TPoly::T());
  CHECK(regularize(MzvIndex{2, 3}) == TPoly(QSElement({2, 3})));
  CHECK(regularize(MzvIndex{}) == TPoly(QSElement::unit()));

  // (2)(1) = (2,1) + (1,2) + (3)
  const TPoly r21 = regularize(MzvIndex{2, 1});
  CHECK(r21.degree() == 1);
  CHECK(r21.coefficient(1) == QSElement({2}));
  CHECK(r21.coefficient(0) == QSElement({1, 2}) * Rational(-1) - QSElement({3}));
  MzvEvaluator eval;
  CHECK(eval_tpoly(r21, 0.0, eval) == doctest::Approx(-2 * 1.2020569031595942854).epsilon(1e-13));

  const TPoly r11 = regularize(MzvIndex{1, 1});
  CHECK(r11.coefficient(2) == QSElement::unit() * Rational(1, 2));
  CHECK(r11.coefficient(1).is_zero());
  CHECK(r11.coefficient(0) == QSElement({2}) * Rational(-1, 2));
}

TEST_CASE("property: regularisation is a stuffle homomorphism") {
  std::mt19937 rng(83);
  MzvEvaluator eval;
  for (int trial = 0; trial < 30; ++trial) {
    const MzvIndex u = testgen::random_index(rng, 4, 3), v = testgen::random_index(rng, 4, 3);
    for (double t : {0.0, 0.7, -1.3}) {
      const double lhs = eval_tpoly(regularize(stuffle_product(u, v)), t, eval);
      const double rhs = eval_tpoly(regularize(u), t, eval) * eval_tpoly(regularize(v), t, eval);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
    CHECK((regularize(u) * regularize(v)) == regularize(stuffle_product(u, v)));
  }
}

TEST_CASE("TPoly arithmetic and printing") {
  const TPoly t = TPoly::T();
  const TPoly sq = t * t;
  CHECK(sq.degree() == 2);
  CHECK((sq - sq).is_zero());
  CHECK((t * Rational(0)).is_zero());
  CHECK(to_string(TPoly(QSElement({3}))) == "(z(3))");
  CHECK(to_string(TPoly::T()) == "(1)*T");
  CHECK_FALSE(to_string(regularize(MzvIndex{2, 1})).empty());
}

TEST_CASE("Schur regularisation of admissible tableaux has no T") {
  const Tableau k = parse_tableau(". 1 3 / 3 1 / 1 3");
  CHECK(schur_regularize(k).degree() == 0);
  CHECK(schur_regularize(parse_tableau("1")).degree() == 1);
}

TEST_CASE("regularised Jacobi-Trudi on the admissible 3-stair") {
  const Tableau k = parse_tableau(". 1 3 / 3 1 / 1 3");
  const OutsideDecomposition theta =
      decomposition_from_ribbon(k.shape(), Ribbon(-2, {Step::Right, Step::Up, Step::Up, Step::Right}));
  MzvEvaluator eval;
  const RegularizedJtReport rep = regularized_jt_check(DiagonalTableau::from_tableau(k), theta, {0.0, 1.0}, eval);
  CHECK(rep.admissible);
  CHECK(rep.max_discrepancy <= 1e-4);
  CHECK(rep.det_t_spread <= 1e-4);
  // Both sides against the high-M truncated value.
  const double trunc = 2 * to_double(truncated_from_expansion(expand_tableau(k), 400)) -
                       to_double(truncated_from_expansion(expand_tableau(k), 200));
  CHECK(std::abs(rep.lhs[0] - trunc) < 1e-3);
}
