#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "schurmzv/shapes.hpp"

namespace schurmzv {

/// Result of reading the grid text format: one line per row, '.' for a
/// skew hole, a positive integer per box. Shape-only files mark boxes with
/// '#', '*', 'x' or 'o'. A '/' also ends a row, so ". a b / c d" is two rows.
struct ParsedGrid {
  SkewShape shape;
  std::optional<Tableau> tableau;  ///< present iff every box carries an integer
};

ParsedGrid parse_grid(std::string_view text);

/// Parses a grid that must carry entries. Throws ParseError otherwise.
Tableau parse_tableau(std::string_view text);

/// Parses a grid and keeps only its shape (entries, if any, are ignored).
SkewShape parse_shape(std::string_view text);

std::string render(const Tableau& t);
std::string render(const SkewShape& shape, char box = '#');

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace schurmzv
