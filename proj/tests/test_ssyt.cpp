#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "schurmzv/errors.hpp"
#include "schurmzv/ssyt.hpp"
#include "schurmzv/text_format.hpp"

using namespace schurmzv;

TEST_CASE("enumeration count matches brute force") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const SkewShape s = testgen::random_skew(rng, 6, false);
    const int M = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<std::vector<int>> expected;
    testgen::brute_force_ssyt(s, M, [&](const std::vector<int>& v) { expected.push_back(v); });
    std::sort(expected.begin(), expected.end());
    const auto got = enumerate_ssyt(s, M);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(got == expected);
  }
}

TEST_CASE("small counts") {
  // SSYT of shape (2,1) with entries < 4: the Kostka count s_{21}(1,1,1) = 8.
  CHECK(enumerate_ssyt(make_skew({2, 1}, {}), 4).size() == 8);
  CHECK(enumerate_ssyt(make_skew({1, 1, 1}, {}), 3).empty());
  CHECK(enumerate_ssyt(SkewShape{}, 1).size() == 1);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_ssyt(make_skew({3, 3}, {}), 20, 100), ResourceError);
}

TEST_CASE("truncated Schur zeta agrees with brute force") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const SkewShape s = testgen::random_skew(rng, 5, false);
    const Tableau k = testgen::random_tableau(rng, s, 1, 3);
    const int M = std::uniform_int_distribution<int>(2, 6)(rng);
    CHECK(truncated_schur_zeta(k, M) == testgen::brute_force_zeta(k, M));
  }
}

TEST_CASE("single box and empty tableau") {
  Rational h(0);
  for (int m = 1; m < 7; ++m) h += Rational(1, m * m);
  CHECK(truncated_schur_zeta(parse_tableau("2"), 7) == h);
  CHECK(truncated_schur_zeta(Tableau(SkewShape{}, {}), 5) == 1);
}

TEST_CASE("Schur polynomial Jacobi-Trudi identity") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const SkewShape s = testgen::random_skew(rng, 6, false);
    const int M = std::uniform_int_distribution<int>(2, 5)(rng);
    std::vector<Rational> x;
    for (int i = 1; i < M; ++i) {
      Rational xi(std::uniform_int_distribution<int>(-5, 5)(rng), i + 1);
      xi.canonicalize();
      x.push_back(xi);
    }
    const SchurPolyReport rep = schur_poly_check(s, M, x);
    CHECK(rep.equal);
    CHECK(rep.lhs == rep.rhs);
    Rational direct(0);
    const auto cells = s.cells();
    testgen::brute_force_ssyt(s, M, [&](const std::vector<int>& v) {
      Rational term(1);
      for (int m : v) term *= x[static_cast<std::size_t>(m - 1)];
      direct += term;
    });
    CHECK(rep.lhs == direct);
  }
}

TEST_CASE("Jacobi-Trudi on the 3-stair") {
  const Ribbon r(-2, {Step::Right, Step::Up, Step::Up, Step::Right});
  CHECK(r.shape() == parse_shape(". # # / . # / # #"));
  const SkewShape host = parse_shape(". # # / # # / # #");
  const OutsideDecomposition theta = decomposition_from_ribbon(host, r);
  CHECK(theta.size() == 2);
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const DiagonalTableau k = testgen::random_diagonal(rng, host, 1, 3);
    for (int M : {2, 4, 6}) {
      const JacobiTrudiReport rep = jacobi_trudi_check_exact(k, theta, M);
      CHECK(rep.equal);
      CHECK(rep.lhs == testgen::brute_force_zeta(k.to_tableau(), M));
      CHECK(rep.matrix.rows() == 2);
    }
  }
}

TEST_CASE("property: Jacobi-Trudi for random ribbons") {
  std::mt19937 rng(59);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 80; ++trial) {
    const SkewShape s = testgen::random_skew(rng, 7);
    const auto contents = s.content_set();
    const Ribbon r = testgen::random_ribbon(rng, contents.front(), contents.back());
    OutsideDecomposition theta;
    try {
      theta = decomposition_from_ribbon(s, r);
    } catch (const PreconditionError&) {
      continue;
    }
    ++checked;
    const DiagonalTableau k = testgen::random_diagonal(rng, s, 1, 3);
    const int M = std::uniform_int_distribution<int>(2, 5)(rng);
    const JacobiTrudiReport rep = jacobi_trudi_check_exact(k, theta, M);
    CHECK(rep.equal);
    CHECK(rep.lhs == testgen::brute_force_zeta(k.to_tableau(), M));
  }
  CHECK(checked >= 40);
}
