#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "generators.hpp"
#include "schurmzv/errors.hpp"
#include "schurmzv/ribbons.hpp"
#include "schurmzv/ssyt.hpp"
#include "schurmzv/text_format.hpp"

using namespace schurmzv;

namespace {

const SkewShape kHost = make_skew({4, 3, 3, 2, 1}, {1});
const SkewShape kRibbon = make_skew({6, 6, 6, 5, 3}, {6, 6, 4, 2});

std::vector<Cell> cells_of(std::initializer_list<Cell> cs) { return cs; }

/// Pieces of the example decomposition of (4,3,3,2,1)/(1), ordered by content.
OutsideDecomposition example_theta() {
  return {kHost,
          {cells_of({{5, 1}}),
           cells_of({{4, 1}, {4, 2}, {3, 2}, {3, 3}}),
           cells_of({{3, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}, {1, 4}}),
           cells_of({{1, 2}})}};
}


}  // namespace

TEST_CASE("is_ribbon") {
  CHECK(is_ribbon(kRibbon));
  CHECK_FALSE(is_ribbon(make_skew({2, 2}, {})));
  CHECK(is_ribbon(make_skew({1}, {})));
  CHECK_FALSE(is_ribbon(make_skew({2, 1}, {1})));
  CHECK_FALSE(is_ribbon(SkewShape{}));
}

TEST_CASE("ribbon walks") {
  const Ribbon r = Ribbon::from_shape(kRibbon);
  CHECK(r.first_content() == -4);
  CHECK(r.last_content() == 3);
  CHECK(r.steps() == std::vector<Step>{Step::Right, Step::Right, Step::Up, Step::Right, Step::Right, Step::Up,
                                       Step::Right});
  CHECK(r.shape() == kRibbon);
  CHECK(Ribbon::straight(0, 2, Step::Up).shape() == make_skew({3, 3, 3}, {2, 2, 2}));
  CHECK(r.slice(-4, -2) == Ribbon(-4, {Step::Right, Step::Right}));
  CHECK(r.slice(-2, 0) == Ribbon(-2, {Step::Up, Step::Right}));
  CHECK_THROWS_AS(r.slice(-5, 0), PreconditionError);
  CHECK_THROWS_AS(Ribbon::from_shape(make_skew({2, 2}, {})), PreconditionError);
}

TEST_CASE("furthest-left placement is a ribbon with the right contents") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> first(-6, 6), len(0, 8);
    const int f = first(rng);
    const Ribbon r = testgen::random_ribbon(rng, f, f + len(rng));
    const SkewShape s = r.shape();
    CHECK(is_ribbon(s));
    CHECK(s.content_set().front() == r.first_content());
    CHECK(s.content_set().back() == r.last_content());
    CHECK(Ribbon::from_shape(s) == r);
    // Furthest left: no translate one step up-left still has positive coordinates.
    bool can_move = true;
    for (const Cell& c : s.cells()) can_move = can_move && c.row > 1 && c.col > 1;
    CHECK_FALSE(can_move);
  }
}

TEST_CASE("example decomposition: containing ribbon and table") {
  const OutsideDecomposition theta = example_theta();
  CHECK_NOTHROW(validate(theta));
  CHECK(minimal_containing_ribbon(theta).shape() == kRibbon);

  const SubribbonTable t = subribbon_table(theta);
  REQUIRE(t.size() == 4);
  CHECK(std::get<Ribbon>(t(0, 2)) == t.reference);  // R(1,3) is all of R
  CHECK(is_empty(t(1, 0)));
  CHECK(is_undefined(t(2, 0)));
  CHECK(is_undefined(t(3, 0)));
  // The content rule makes R(4,2) empty and R(4,3) the subribbon on [1,3].
  CHECK(is_empty(t(3, 1)));
  CHECK(std::get<Ribbon>(t(3, 2)) == t.reference.slice(1, 3));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::get<Ribbon>(t(i, i)) == Ribbon::from_cells(theta.pieces[i]));
}

TEST_CASE("decomposition_from_ribbon reproduces the example") {
  const OutsideDecomposition theta = decomposition_from_ribbon(kHost, Ribbon::from_shape(kRibbon));
  const OutsideDecomposition expected = example_theta();
  REQUIRE(theta.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(theta.pieces[i] == expected.pieces[i]);
}

TEST_CASE("decomposition_from_ribbon errors") {
  CHECK_THROWS_AS(decomposition_from_ribbon(make_skew({2, 2}, {}), Ribbon::straight(-1, 0, Step::Up)),
                  PreconditionError);
  CHECK_THROWS_AS(decomposition_from_ribbon(make_skew({2, 1}, {1}), Ribbon::straight(-1, 1, Step::Up)),
                  PreconditionError);
}

TEST_CASE("a ribbon host is its own single piece") {
  const OutsideDecomposition theta = decomposition_from_ribbon(kRibbon, Ribbon::from_shape(kRibbon));
  CHECK(theta.size() == 1);
  CHECK(minimal_containing_ribbon(theta) == Ribbon::from_shape(kRibbon));
}

TEST_CASE("row and column ribbons give the row and column decompositions") {
  const SkewShape s = make_skew({4, 3, 1}, {1});
  const auto contents = s.content_set();
  const OutsideDecomposition cols =
      decomposition_from_ribbon(s, Ribbon::straight(contents.front(), contents.back(), Step::Up));
  for (const auto& piece : cols.pieces)
    for (const Cell& c : piece) CHECK(c.col == piece.front().col);
  CHECK(cols.size() == 4);
  const OutsideDecomposition rows =
      decomposition_from_ribbon(s, Ribbon::straight(contents.front(), contents.back(), Step::Right));
  for (const auto& piece : rows.pieces)
    for (const Cell& c : piece) CHECK(c.row == piece.front().row);
  CHECK(rows.size() == 3);
}

TEST_CASE("column decomposition of the 2x2 square nests in a column") {
  const SkewShape sq = make_skew({2, 2}, {});
  const OutsideDecomposition theta{sq, {cells_of({{2, 1}, {1, 1}}), cells_of({{2, 2}, {1, 2}})}};
  CHECK(minimal_containing_ribbon(theta) == Ribbon::straight(-1, 1, Step::Up));
}

TEST_CASE("property: decompositions from random ribbons") {
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const SkewShape s = testgen::random_skew(rng, 10);
    const auto contents = s.content_set();
    const Ribbon r = testgen::random_ribbon(rng, contents.front(), contents.back());
    OutsideDecomposition theta;
    try {
      theta = decomposition_from_ribbon(s, r);
    } catch (const PreconditionError&) {
      continue;
    }
    ++checked;
    CHECK_NOTHROW(validate(theta));
    CHECK(minimal_containing_ribbon(theta) == r);
    const SubribbonTable table = subribbon_table(theta);
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table.size(); ++j)
        if (const auto* sub = std::get_if<Ribbon>(&table(i, j))) {
          CHECK(is_ribbon(sub->shape()));
          CHECK(sub->first_content() == theta.min_content(i));
          CHECK(sub->last_content() == theta.max_content(j));
        }
  }
  CHECK(checked > 100);
}

TEST_CASE("tie-breaking does not change the decomposition") {
  // Top-most instead of bottom-most start among equal contents; compare the
  // resulting piece sets.
  auto alternative = [](const SkewShape& host, const Ribbon& r) {
    std::set<Cell> unused;
    for (const Cell& c : host.cells()) unused.insert(c);
    std::set<std::vector<Cell>> pieces;
    while (!unused.empty()) {
      Cell cur = *std::min_element(unused.begin(), unused.end(), [](Cell a, Cell b) {
        if (a.content() != b.content()) return a.content() < b.content();
        return a.row < b.row;
      });
      std::vector<Cell> piece{cur};
      unused.erase(cur);
      while (cur.content() < r.last_content()) {
        const Cell next = r.step_after(cur.content()) == Step::Up ? cur.up() : cur.right();
        if (!unused.contains(next)) break;
        piece.push_back(next);
        unused.erase(next);
        cur = next;
      }
      pieces.insert(piece);
    }
    return pieces;
  };
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const SkewShape s = testgen::random_skew(rng, 10);
    const auto contents = s.content_set();
    const Ribbon r = testgen::random_ribbon(rng, contents.front(), contents.back());
    OutsideDecomposition theta;
    try {
      theta = decomposition_from_ribbon(s, r);
    } catch (const PreconditionError&) {
      continue;
    }
    const std::set<std::vector<Cell>> ours(theta.pieces.begin(), theta.pieces.end());
    CHECK(ours == alternative(s, r));
  }
}

TEST_CASE("fill_subribbon on the example") {
  const Tableau k = parse_tableau(". 2 1 5 / 6 3 2 / 4 6 3 / 7 4 / 3");
  const DiagonalTableau dk = DiagonalTableau::from_tableau(k);
  const SubribbonTable t = subribbon_table(example_theta());
  const FilledEntry r12 = fill_subribbon(dk, t(0, 1));
  const FilledEntry r33 = fill_subribbon(dk, t(2, 2));
  CHECK(testgen::same_picture(std::get<Tableau>(r12), parse_tableau(". . 6 3 / 3 7 4")));
  CHECK(testgen::same_picture(std::get<Tableau>(r33), parse_tableau(". . 1 5 / 6 3 2 / 4")));
  CHECK(std::holds_alternative<EmptyRibbon>(fill_subribbon(dk, t(1, 0))));
  CHECK(std::holds_alternative<UndefinedRibbon>(fill_subribbon(dk, t(2, 0))));
  const FilledEntry single = fill_subribbon(dk, Ribbon(0, {}));
  CHECK(std::get<Tableau>(single).entries() == std::vector<int>{3});
}
