#include "schurmzv/text_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "schurmzv/errors.hpp"

namespace schurmzv {

namespace {

bool is_marker(const std::string& tok) { return tok == "#" || tok == "*" || tok == "x" || tok == "o"; }

std::vector<std::string> split_rows(std::string_view text) {
  std::vector<std::string> rows;
  std::string current;
  auto flush = [&] {
    if (current.find_first_not_of(" \t\r") != std::string::npos) rows.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (c == '\n' || c == '/') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return rows;
}

}  // namespace

ParsedGrid parse_grid(std::string_view text) {
  std::vector<int> lambda, mu;
  std::vector<std::vector<int>> entries;
  bool any_marker = false, any_number = false;
  int line_no = 0;
  for (const std::string& line : split_rows(text)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] == '%')
      continue;
    std::istringstream in(line);
    std::string tok;
    int holes = 0;
    std::vector<int> row;
    bool seen_box = false;
    while (in >> tok) {
      if (tok == ".") {
        if (seen_box) throw ParseError("row " + std::to_string(line_no) + ": '.' after a box; holes must be left-justified");
        ++holes;
        continue;
      }
      seen_box = true;
      if (is_marker(tok)) {
        any_marker = true;
        row.push_back(0);
        continue;
      }
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("row " + std::to_string(line_no) + ": unrecognised token '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("row " + std::to_string(line_no) + ": unrecognised token '" + tok + "'");
      if (value < 1) throw ParseError("row " + std::to_string(line_no) + ": entries must be positive integers");
      any_number = true;
      row.push_back(static_cast<int>(value));
    }
    mu.push_back(holes);
    lambda.push_back(holes + static_cast<int>(row.size()));
    entries.push_back(std::move(row));
  }
  if (any_marker && any_number) throw ParseError("grid mixes box markers and integer entries");
  // Trailing all-hole rows would be zero-length rows of lambda.
  while (!lambda.empty() && lambda.back() == mu.back() && entries.back().empty() && lambda.back() == 0) {
    lambda.pop_back();
    mu.pop_back();
    entries.pop_back();
  }
  ParsedGrid out;
  try {
    out.shape = SkewShape(Partition(lambda), Partition(mu));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("rows do not form a skew diagram: ") + e.what());
  }
  if (static_cast<int>(entries.size()) != out.shape.rows()) throw ParseError("rows do not form a skew diagram");
  if (!any_marker && !out.shape.empty()) out.tableau = Tableau(out.shape, std::move(entries));
  if (out.shape.empty()) out.tableau = Tableau(out.shape, std::vector<std::vector<int>>(static_cast<std::size_t>(out.shape.rows())));
  return out;
}

Tableau parse_tableau(std::string_view text) {
  ParsedGrid g = parse_grid(text);
  if (!g.tableau) throw ParseError("expected a tableau with integer entries, got a bare shape");
  return *g.tableau;
}

SkewShape parse_shape(std::string_view text) { return parse_grid(text).shape; }

std::string render(const Tableau& t) {
  std::ostringstream out;
  const SkewShape& s = t.shape();
  for (int i = 1; i <= s.rows(); ++i) {
    bool first = true;
    auto emit = [&](const std::string& tok) {
      if (!first) out << ' ';
      out << tok;
      first = false;
    };
    for (int j = 1; j < s.row_first(i); ++j) emit(".");
    for (int j = s.row_first(i); j <= s.row_last(i); ++j) emit(std::to_string(t.at({i, j})));
    out << '\n';
  }
  return out.str();
}

std::string render(const SkewShape& shape, char box) {
  std::ostringstream out;
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_last(i); ++j) {
      if (j > 1) out << ' ';
      out << (j < shape.row_first(i) ? '.' : box);
    }
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace schurmzv
