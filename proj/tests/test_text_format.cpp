#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "schurmzv/errors.hpp"
#include "schurmzv/text_format.hpp"

using namespace schurmzv;

TEST_CASE("parse small tableaux") {
  const Tableau t = parse_tableau(". 1 3\n1 3");
  CHECK(t.shape() == make_skew({3, 2}, {1}));
  CHECK(t.at({1, 2}) == 1);
  CHECK(t.at({2, 2}) == 3);

  const Tableau sq = parse_tableau("3 1 3\n1 3 1\n3 1 3");
  CHECK(sq.shape() == make_skew({3, 3, 3}, {}));
  CHECK(sq.at({2, 2}) == 3);
  CHECK(parse_tableau("3 1 3 / 1 3 1 / 3 1 3") == sq);
}

TEST_CASE("comments and blank lines") {
  const Tableau t = parse_tableau("% stair\n\n. 1\n1 3\n\n");
  CHECK(t.shape() == make_skew({2, 2}, {1}));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_tableau("1 3\n3 1\n. 2"), ParseError);
  CHECK_THROWS_AS(parse_tableau("1 . 3"), ParseError);
  CHECK_THROWS_AS(parse_tableau("1 0"), ParseError);
  CHECK_THROWS_AS(parse_tableau("1 -2"), ParseError);
  CHECK_THROWS_AS(parse_tableau("1 a"), ParseError);
  CHECK_THROWS_AS(parse_tableau("# #"), ParseError);
  CHECK_THROWS_AS(parse_grid("# 1"), ParseError);
  CHECK_THROWS_AS(parse_tableau(". 1\n. . 1"), ParseError);
}

TEST_CASE("holes may leave a row empty") {
  CHECK(parse_tableau(". . 1\n1").shape() == make_skew({3, 1}, {2}));
  CHECK(parse_shape(". .\n. #\n#") == make_skew({2, 2, 1}, {2, 1}));
}

TEST_CASE("shapes from markers") {
  const SkewShape r = parse_shape(". . . . . #\n. . . # # #\n. # # #\n# # #");
  CHECK(r.size() == 10);
  const ParsedGrid g = parse_grid("# #\n#");
  CHECK_FALSE(g.tableau.has_value());
  CHECK(g.shape == make_skew({2, 1}, {}));
  CHECK(parse_shape(". 1 3\n1 3") == make_skew({3, 2}, {1}));
}

TEST_CASE("render") {
  CHECK(render(parse_tableau(". 1 3\n1 3")) == ". 1 3\n1 3\n");
  CHECK(render(make_skew({2, 1}, {1})) == ". #\n#\n");
}

TEST_CASE("round trip on random tableaux") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const SkewShape s = testgen::random_skew(rng, 14, false);
    const Tableau t = testgen::random_tableau(rng, s, 1, 12);
    CHECK(parse_tableau(render(t)) == t);
    CHECK(parse_shape(render(s)) == s);
  }
}
