#include "schurmzv/ribbons.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "schurmzv/errors.hpp"

namespace schurmzv {

bool is_ribbon(const SkewShape& shape) {
  if (shape.empty() || !shape.is_edge_connected()) return false;
  for (const Cell& c : shape.cells())
    if (shape.contains(c.right()) && shape.contains(c.down()) && shape.contains(c.right().down())) return false;
  return true;
}

// ---------------------------------------------------------------- Ribbon

Ribbon::Ribbon(int first_content, std::vector<Step> steps) : first_(first_content), steps_(std::move(steps)) {}

Ribbon Ribbon::from_cells(const std::vector<Cell>& cells) {
  if (cells.empty()) throw PreconditionError("a ribbon needs at least one box");
  std::vector<Cell> sorted = cells;
  std::sort(sorted.begin(), sorted.end(), [](Cell a, Cell b) { return a.content() < b.content(); });
  std::vector<Step> steps;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Cell prev = sorted[i - 1], cur = sorted[i];
    if (cur == prev.right()) {
      steps.push_back(Step::Right);
    } else if (cur == prev.up()) {
      steps.push_back(Step::Up);
    } else {
      throw PreconditionError("boxes do not form a ribbon walk");
    }
  }
  return Ribbon(sorted.front().content(), std::move(steps));
}

Ribbon Ribbon::from_shape(const SkewShape& shape) {
  if (!is_ribbon(shape)) throw PreconditionError("shape is not a ribbon");
  return from_cells(shape.cells());
}

Ribbon Ribbon::straight(int first_content, int last_content, Step s) {
  if (last_content < first_content) throw PreconditionError("empty content interval");
  return Ribbon(first_content, std::vector<Step>(static_cast<std::size_t>(last_content - first_content), s));
}

Step Ribbon::step_after(int c) const {
  if (c < first_content() || c >= last_content()) throw PreconditionError("no step after content " + std::to_string(c));
  return steps_[static_cast<std::size_t>(c - first_)];
}

std::vector<Cell> Ribbon::cells() const {
  const int ups = static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Up));
  Cell cur{std::max(1 + ups, 1 - first_), 0};
  cur.col = cur.row + first_;
  std::vector<Cell> out{cur};
  for (Step s : steps_) {
    cur = s == Step::Up ? cur.up() : cur.right();
    out.push_back(cur);
  }
  return out;
}

SkewShape Ribbon::shape() const {
  const auto c = cells();
  return SkewShape::from_cells(c);
}

Ribbon Ribbon::slice(int lo, int hi) const {
  if (lo < first_content() || hi > last_content() || lo > hi)
    throw PreconditionError("content interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] is not inside the ribbon");
  return Ribbon(lo, std::vector<Step>(steps_.begin() + (lo - first_), steps_.begin() + (hi - first_)));
}

// ---------------------------------------------------------------- OutsideDecomposition

void validate(const OutsideDecomposition& theta) {
  const SkewShape& host = theta.host;
  std::set<Cell> seen;
  for (std::size_t p = 0; p < theta.pieces.size(); ++p) {
    const auto& piece = theta.pieces[p];
    const std::string name = "piece " + std::to_string(p + 1);
    if (piece.empty()) throw PreconditionError(name + " is empty");
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (!host.contains(piece[i])) throw PreconditionError(name + " leaves the host diagram");
      if (!seen.insert(piece[i]).second) throw PreconditionError(name + " overlaps an earlier piece");
      if (i > 0 && piece[i] != piece[i - 1].right() && piece[i] != piece[i - 1].up())
        throw PreconditionError(name + " is not an up/right walk ordered by content");
    }
    const Cell start = piece.front(), end = piece.back();
    if (host.contains(start.left()) && host.contains(start.down()))
      throw PreconditionError(name + " does not start on the left or bottom perimeter");
    if (host.contains(end.right()) && host.contains(end.up()))
      throw PreconditionError(name + " does not end on the right or top perimeter");
  }
  if (seen.size() != host.size()) throw PreconditionError("pieces do not cover the host diagram");
}

Ribbon minimal_containing_ribbon(const OutsideDecomposition& theta) {
  validate(theta);
  const SkewShape& host = theta.host;
  if (host.empty()) throw PreconditionError("empty host has no containing ribbon");
  if (!host.is_edge_connected()) throw PreconditionError("host diagram is not edge-connected");
  const auto contents = host.content_set();
  std::map<int, Step> forced;
  auto force = [&](int c, Step s) {
    auto [it, inserted] = forced.try_emplace(c, s);
    if (!inserted && it->second != s) throw PreconditionError("pieces do not nest into a common ribbon");
  };
  for (const auto& piece : theta.pieces)
    for (std::size_t i = 1; i < piece.size(); ++i)
      force(piece[i - 1].content(), piece[i] == piece[i - 1].up() ? Step::Up : Step::Right);
  for (const auto& piece : theta.pieces) {
    const Cell end = piece.back();
    if (end.content() == contents.back()) continue;
    const bool up = host.contains(end.up()), right = host.contains(end.right());
    if (up && !right) force(end.content(), Step::Right);
    if (right && !up) force(end.content(), Step::Up);
  }
  std::vector<Step> steps;
  for (int c = contents.front(); c < contents.back(); ++c) {
    const auto it = forced.find(c);
    if (it == forced.end()) throw PreconditionError("pieces do not determine a containing ribbon");
    steps.push_back(it->second);
  }
  return Ribbon(contents.front(), std::move(steps));
}

SubribbonTable subribbon_table(const OutsideDecomposition& theta) {
  SubribbonTable table{minimal_containing_ribbon(theta), {}};
  const std::size_t n = theta.size();
  table.entries.assign(n, std::vector<SubribbonEntry>(n, UndefinedRibbon{}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int lo = theta.min_content(i), hi = theta.max_content(j);
      if (lo <= hi) {
        table.entries[i][j] = table.reference.slice(lo, hi);
      } else if (lo == hi + 1) {
        table.entries[i][j] = EmptyRibbon{};
      }
    }
  return table;
}

OutsideDecomposition decomposition_from_ribbon(const SkewShape& host, const Ribbon& r) {
  if (!host.is_edge_connected()) throw PreconditionError("host diagram is not edge-connected");
  const auto contents = host.content_set();
  if (contents.empty() || contents.front() != r.first_content() || contents.back() != r.last_content())
    throw PreconditionError("ribbon content interval does not match the host diagram");
  OutsideDecomposition theta{host, {}};
  std::set<Cell> unused;
  for (const Cell& c : host.cells()) unused.insert(c);
  while (!unused.empty()) {
    Cell cur = *std::min_element(unused.begin(), unused.end(), [](Cell a, Cell b) {
      if (a.content() != b.content()) return a.content() < b.content();
      return a.row > b.row;
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
    theta.pieces.push_back(std::move(piece));
  }
  validate(theta);
  return theta;
}

Tableau fill_ribbon(const DiagonalTableau& k, const Ribbon& r) {
  return Tableau::filled(r.shape(), [&](Cell c) { return k.at_content(c.content()); });
}

FilledEntry fill_subribbon(const DiagonalTableau& k, const SubribbonEntry& entry) {
  if (const auto* r = std::get_if<Ribbon>(&entry)) return fill_ribbon(k, *r);
  if (is_empty(entry)) return EmptyRibbon{};
  return UndefinedRibbon{};
}

}  // namespace schurmzv
