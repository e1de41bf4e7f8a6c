#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "schurmzv/shapes.hpp"

namespace schurmzv {

enum class Step { Up, Right };

bool is_ribbon(const SkewShape& shape);

/// A ribbon stored up to diagonal translation: the content of its first
/// (bottom-left) box and the walk to its last box. One box per content.
class Ribbon {
 public:
  Ribbon() = default;
  Ribbon(int first_content, std::vector<Step> steps);

  /// Reads the walk of a ribbon-shaped diagram. Throws PreconditionError if
  /// the shape is not a nonempty ribbon.
  static Ribbon from_shape(const SkewShape& shape);
  static Ribbon from_cells(const std::vector<Cell>& cells);

  /// Ribbon with every step equal to `s` (a row or a column).
  static Ribbon straight(int first_content, int last_content, Step s);

  int first_content() const { return first_; }
  int last_content() const { return first_ + static_cast<int>(steps_.size()); }
  std::size_t size() const { return steps_.size() + 1; }
  const std::vector<Step>& steps() const { return steps_; }

  /// The step from the box of content c to the box of content c + 1.
  Step step_after(int c) const;

  /// Cells of the furthest-left translate, ordered by content.
  std::vector<Cell> cells() const;
  SkewShape shape() const;

  /// The subribbon spanning contents [lo, hi].
  Ribbon slice(int lo, int hi) const;

  bool operator==(const Ribbon&) const = default;

 private:
  int first_ = 0;
  std::vector<Step> steps_;
};

/// Pieces are stored as cells of the host, each ordered by increasing content.
struct OutsideDecomposition {
  SkewShape host;
  std::vector<std::vector<Cell>> pieces;

  std::size_t size() const { return pieces.size(); }
  int min_content(std::size_t i) const { return pieces[i].front().content(); }
  int max_content(std::size_t i) const { return pieces[i].back().content(); }
};

/// Throws PreconditionError unless the pieces are ribbons that partition the
/// host, each starting on the left/bottom perimeter and ending on the
/// right/top perimeter.
void validate(const OutsideDecomposition& theta);

Ribbon minimal_containing_ribbon(const OutsideDecomposition& theta);

struct EmptyRibbon {
  bool operator==(const EmptyRibbon&) const = default;
};
struct UndefinedRibbon {
  bool operator==(const UndefinedRibbon&) const = default;
};
using SubribbonEntry = std::variant<Ribbon, EmptyRibbon, UndefinedRibbon>;

inline bool is_empty(const SubribbonEntry& e) { return std::holds_alternative<EmptyRibbon>(e); }
inline bool is_undefined(const SubribbonEntry& e) { return std::holds_alternative<UndefinedRibbon>(e); }

struct SubribbonTable {
  Ribbon reference;
  std::vector<std::vector<SubribbonEntry>> entries;

  std::size_t size() const { return entries.size(); }
  /// 0-based access.
  const SubribbonEntry& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

SubribbonTable subribbon_table(const OutsideDecomposition& theta);

/// Builds the outside decomposition whose minimal containing ribbon is `r`:
/// start at the unused box of smallest content (bottom-most on ties) and
/// follow r's steps while they stay inside the host.
OutsideDecomposition decomposition_from_ribbon(const SkewShape& host, const Ribbon& r);

using FilledEntry = std::variant<Tableau, EmptyRibbon, UndefinedRibbon>;

/// Fills a subribbon with the diagonal values of k.
FilledEntry fill_subribbon(const DiagonalTableau& k, const SubribbonEntry& entry);
Tableau fill_ribbon(const DiagonalTableau& k, const Ribbon& r);

}  // namespace schurmzv
