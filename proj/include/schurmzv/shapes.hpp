#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace schurmzv {

/// A box of a Young diagram in matrix coordinates: row 1 at the top,
/// column 1 at the left.
struct Cell {
  int row = 0;
  int col = 0;

  constexpr int content() const { return col - row; }
  constexpr Cell up() const { return {row - 1, col}; }
  constexpr Cell down() const { return {row + 1, col}; }
  constexpr Cell left() const { return {row, col - 1}; }
  constexpr Cell right() const { return {row, col + 1}; }

  auto operator<=>(const Cell&) const = default;
};

/// Weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;

  /// 1-based part access; zero beyond the length.
  int operator[](int i) const;

  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// The skew diagram lambda/mu, identified with its cell set
/// D = {(i,j) : mu_i < j <= lambda_i}.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  /// The skew shape whose diagram is exactly `cells` (in place, no
  /// translation). Throws PreconditionError if the cells do not form one.
  static SkewShape from_cells(std::span<const Cell> cells);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  int rows() const { return static_cast<int>(outer_.length()); }
  /// First and last column of row i (1-based); empty when first > last.
  int row_first(int i) const { return inner_[i] + 1; }
  int row_last(int i) const { return outer_[i]; }

  bool contains(Cell c) const;
  bool empty() const { return size() == 0; }
  std::size_t size() const;

  /// Cells in row-major (reading) order.
  std::vector<Cell> cells() const;

  /// Sorted distinct contents j - i.
  std::vector<int> content_set() const;

  /// Cells with no right and no lower neighbour.
  std::vector<Cell> corners() const;

  bool is_edge_connected() const;

  /// The conjugate skew shape lambda'/mu'.
  SkewShape conjugate() const;

  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

SkewShape make_skew(const Partition& lambda, const Partition& mu);

/// True when b is a diagonal translate (i+t, j+t) of a.
bool diagonal_translates(const SkewShape& a, const SkewShape& b);

/// A filling of a skew shape with positive integers.
class Tableau {
 public:
  Tableau() = default;
  /// `rows[i-1]` holds the entries of row i from left to right.
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  static Tableau filled(const SkewShape& shape, const std::function<int(Cell)>& entry);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int at(Cell c) const;
  int weight() const;
  bool empty() const { return shape_.empty(); }

  /// Entries in the order of shape().cells().
  std::vector<int> entries() const;

  bool operator==(const Tableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

bool is_admissible(const Tableau& t);
Tableau transpose(const Tableau& t);

/// A tableau that is constant along diagonals, stored by content.
class DiagonalTableau {
 public:
  DiagonalTableau() = default;
  DiagonalTableau(SkewShape shape, std::map<int, int> by_content);

  /// Throws PreconditionError if t is not constant on diagonals.
  static DiagonalTableau from_tableau(const Tableau& t);

  const SkewShape& shape() const { return shape_; }
  const std::map<int, int>& by_content() const { return by_content_; }
  int at_content(int c) const;

  Tableau to_tableau() const;

 private:
  SkewShape shape_;
  std::map<int, int> by_content_;
};

}  // namespace schurmzv
