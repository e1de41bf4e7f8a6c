#include "schurmzv/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "schurmzv/errors.hpp"

namespace schurmzv {

namespace {

std::vector<int> strip_trailing_zeros(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(strip_trailing_zeros(std::move(parts))) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw PreconditionError("partition parts must be positive (zero parts only at the end)");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw PreconditionError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int i) const {
  if (i < 1 || i > static_cast<int>(parts_.size())) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

// ---------------------------------------------------------------- SkewShape

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length())
    throw PreconditionError("inner partition is longer than the outer partition");
  for (int i = 1; i <= static_cast<int>(inner_.length()); ++i)
    if (inner_[i] > outer_[i]) throw PreconditionError("inner partition is not contained in the outer partition");
}

SkewShape make_skew(const Partition& lambda, const Partition& mu) { return SkewShape(lambda, mu); }

SkewShape SkewShape::from_cells(std::span<const Cell> cells) {
  if (cells.empty()) return {};
  std::map<int, std::pair<int, int>> span_by_row;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1) throw PreconditionError("cells must have positive coordinates");
    auto [it, inserted] = span_by_row.try_emplace(c.row, c.col, c.col);
    if (!inserted) {
      it->second.first = std::min(it->second.first, c.col);
      it->second.second = std::max(it->second.second, c.col);
    }
  }
  const int last_row = span_by_row.rbegin()->first;
  const int first_row = span_by_row.begin()->first;
  std::vector<int> lambda(static_cast<std::size_t>(last_row), 0);
  std::vector<int> mu(static_cast<std::size_t>(last_row), 0);
  for (const auto& [row, span] : span_by_row) {
    lambda[static_cast<std::size_t>(row - 1)] = span.second;
    mu[static_cast<std::size_t>(row - 1)] = span.first - 1;
  }
  // Rows without cells are padded as lambda_i = mu_i.
  for (int row = first_row - 1; row >= 1; --row) {
    const auto i = static_cast<std::size_t>(row - 1);
    lambda[i] = mu[i] = lambda[i + 1];
  }
  for (int row = first_row + 1; row < last_row; ++row) {
    const auto i = static_cast<std::size_t>(row - 1);
    if (!span_by_row.contains(row)) lambda[i] = mu[i] = mu[i - 1];
  }
  SkewShape shape;
  try {
    shape = SkewShape(Partition(lambda), Partition(mu));
  } catch (const PreconditionError&) {
    throw PreconditionError("cells do not form a skew diagram");
  }
  std::set<Cell> wanted(cells.begin(), cells.end());
  const auto got = shape.cells();
  if (wanted.size() != got.size() || !std::equal(got.begin(), got.end(), wanted.begin()))
    throw PreconditionError("cells do not form a skew diagram");
  return shape;
}

bool SkewShape::contains(Cell c) const {
  if (c.row < 1 || c.row > rows()) return false;
  return c.col >= row_first(c.row) && c.col <= row_last(c.row);
}

std::size_t SkewShape::size() const { return static_cast<std::size_t>(outer_.size() - inner_.size()); }

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(size());
  for (int i = 1; i <= rows(); ++i)
    for (int j = row_first(i); j <= row_last(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<int> SkewShape::content_set() const {
  std::set<int> contents;
  for (const Cell& c : cells()) contents.insert(c.content());
  return {contents.begin(), contents.end()};
}

std::vector<Cell> SkewShape::corners() const {
  std::vector<Cell> out;
  for (const Cell& c : cells())
    if (!contains(c.right()) && !contains(c.down())) out.push_back(c);
  return out;
}

bool SkewShape::is_edge_connected() const {
  const auto all = cells();
  if (all.empty()) return true;
  std::set<Cell> seen{all.front()};
  std::queue<Cell> frontier;
  frontier.push(all.front());
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop();
    for (const Cell n : {c.up(), c.down(), c.left(), c.right()})
      if (contains(n) && seen.insert(n).second) frontier.push(n);
  }
  return seen.size() == all.size();
}

SkewShape SkewShape::conjugate() const { return SkewShape(outer_.conjugate(), inner_.conjugate()); }

bool diagonal_translates(const SkewShape& a, const SkewShape& b) {
  const auto ca = a.cells();
  const auto cb = b.cells();
  if (ca.size() != cb.size()) return false;
  if (ca.empty()) return true;
  // Row-major order is preserved by diagonal translation.
  const int t = cb.front().row - ca.front().row;
  if (cb.front().col - ca.front().col != t) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (cb[i].row - ca[i].row != t || cb[i].col - ca[i].col != t) return false;
  return true;
}

// ---------------------------------------------------------------- Tableau

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw PreconditionError("tableau has " + std::to_string(rows_.size()) + " rows but its shape has " +
                            std::to_string(shape_.rows()));
  for (int i = 1; i <= shape_.rows(); ++i) {
    const auto& row = rows_[static_cast<std::size_t>(i - 1)];
    const int expected = std::max(0, shape_.row_last(i) - shape_.row_first(i) + 1);
    if (static_cast<int>(row.size()) != expected)
      throw PreconditionError("tableau row " + std::to_string(i) + " has the wrong number of entries");
    for (int v : row)
      if (v < 1) throw PreconditionError("tableau entries must be positive integers");
  }
}

Tableau Tableau::filled(const SkewShape& shape, const std::function<int(Cell)>& entry) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (const Cell& c : shape.cells()) rows[static_cast<std::size_t>(c.row - 1)].push_back(entry(c));
  return Tableau(shape, std::move(rows));
}

int Tableau::at(Cell c) const {
  if (!shape_.contains(c)) throw PreconditionError("cell outside the tableau");
  return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - shape_.row_first(c.row))];
}

int Tableau::weight() const {
  int w = 0;
  for (const auto& row : rows_) w = std::accumulate(row.begin(), row.end(), w);
  return w;
}

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

bool is_admissible(const Tableau& t) {
  for (const Cell& c : t.shape().corners())
    if (t.at(c) < 2) return false;
  return true;
}

Tableau transpose(const Tableau& t) {
  return Tableau::filled(t.shape().conjugate(), [&](Cell c) { return t.at({c.col, c.row}); });
}

// ---------------------------------------------------------------- DiagonalTableau

DiagonalTableau::DiagonalTableau(SkewShape shape, std::map<int, int> by_content)
    : shape_(std::move(shape)), by_content_(std::move(by_content)) {
  const auto contents = shape_.content_set();
  if (contents.size() != by_content_.size() ||
      !std::equal(contents.begin(), contents.end(), by_content_.begin(),
                  [](int c, const auto& kv) { return c == kv.first; }))
    throw PreconditionError("diagonal values must be given for exactly the contents of the shape");
  for (const auto& [c, v] : by_content_)
    if (v < 1) throw PreconditionError("tableau entries must be positive integers");
}

DiagonalTableau DiagonalTableau::from_tableau(const Tableau& t) {
  std::map<int, int> by_content;
  for (const Cell& c : t.shape().cells()) {
    auto [it, inserted] = by_content.try_emplace(c.content(), t.at(c));
    if (!inserted && it->second != t.at(c))
      throw PreconditionError("tableau is not constant on diagonals (content " + std::to_string(c.content()) + ")");
  }
  return DiagonalTableau(t.shape(), std::move(by_content));
}

int DiagonalTableau::at_content(int c) const {
  const auto it = by_content_.find(c);
  if (it == by_content_.end()) throw PreconditionError("content " + std::to_string(c) + " is not on the diagonal tableau");
  return it->second;
}

Tableau DiagonalTableau::to_tableau() const {
  return Tableau::filled(shape_, [&](Cell c) { return at_content(c.content()); });
}

}  // namespace schurmzv
