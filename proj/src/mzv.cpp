#include "schurmzv/mzv.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>

#include "schurmzv/errors.hpp"

namespace schurmzv {

bool is_admissible(const MzvIndex& idx) { return idx.empty() || idx.back() >= 2; }

int weight(const MzvIndex& idx) {
  int w = 0;
  for (int k : idx) w += k;
  return w;
}

std::string format_index(const MzvIndex& idx) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
  out << ')';
  return out.str();
}

MzvIndex parse_index(std::string_view text) {
  MzvIndex idx;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad index part '" + token + "'");
    }
    if (used != token.size() || v < 1) throw ParseError("index parts must be positive integers, got '" + token + "'");
    idx.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      token.push_back(c);
    } else if (c == ',' || c == ' ' || c == '\t' || c == '(' || c == ')' || c == '\n') {
      flush();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in index");
    }
  }
  flush();
  return idx;
}

// ---------------------------------------------------------------- expansion

IndexCombination expand_tableau(const Tableau& k) {
  const auto cells = k.shape().cells();
  const std::size_t n = cells.size();
  if (n > 63) throw ResourceError("expansion is limited to 63 boxes");
  if (n == 0) return {{MzvIndex{}, 1}};
  const std::vector<int> entries = k.entries();
  std::vector<int> left(n, -1), up(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (cells[j] == cells[i].left()) left[i] = static_cast<int>(j);
      if (cells[j] == cells[i].up()) up[i] = static_cast<int>(j);
    }
  auto bit = [](int i) { return std::uint64_t{1} << i; };
  std::map<std::uint64_t, IndexCombination> memo;
  std::function<const IndexCombination&(std::uint64_t)> rec = [&](std::uint64_t remaining) -> const IndexCombination& {
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    IndexCombination out;
    if (remaining == 0) {
      out[MzvIndex{}] = 1;
      return memo.emplace(remaining, std::move(out)).first->second;
    }
    // Boxes whose upper neighbour already carries a smaller value.
    std::vector<int> candidates;
    for (std::size_t i = 0; i < n; ++i)
      if ((remaining & bit(static_cast<int>(i))) && (up[i] < 0 || !(remaining & bit(up[i]))))
        candidates.push_back(static_cast<int>(i));
    const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
    for (std::uint64_t s = 1; s < subsets; ++s) {
      std::uint64_t block = 0;
      int block_weight = 0;
      for (std::size_t c = 0; c < candidates.size(); ++c)
        if (s & (std::uint64_t{1} << c)) {
          block |= bit(candidates[c]);
          block_weight += entries[static_cast<std::size_t>(candidates[c])];
        }
      bool ok = true;
      for (std::size_t c = 0; c < candidates.size() && ok; ++c) {
        if (!(s & (std::uint64_t{1} << c))) continue;
        const int l = left[static_cast<std::size_t>(candidates[c])];
        if (l >= 0 && (remaining & bit(l)) && !(block & bit(l))) ok = false;
      }
      if (!ok) continue;
      for (const auto& [suffix, mult] : rec(remaining & ~block)) {
        MzvIndex idx;
        idx.reserve(suffix.size() + 1);
        idx.push_back(block_weight);
        idx.insert(idx.end(), suffix.begin(), suffix.end());
        out[idx] += mult;
      }
    }
    return memo.emplace(remaining, std::move(out)).first->second;
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(static_cast<int>(n)) - 1;
  return rec(all);
}

// ---------------------------------------------------------------- numerics

namespace {

using Word = std::vector<int>;  // letters 0 (dt/t) and 1 (dt/(1-t))

/// Li_{s_1..s_m}(1/2) for the word x0^{s_1-1} x1 ... x0^{s_m-1} x1.
long double polylog_half(const Word& word, int terms) {
  if (word.empty()) return 1.0L;
  std::vector<int> s;
  int zeros = 0;
  for (int letter : word) {
    if (letter == 0) {
      ++zeros;
    } else {
      s.push_back(zeros + 1);
      zeros = 0;
    }
  }
  // running[n] = sum over chains of the inner variables with outermost <= n.
  std::vector<long double> running(static_cast<std::size_t>(terms) + 1, 1.0L);
  running[0] = 0.0L;
  bool innermost = true;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    std::vector<long double> next(running.size(), 0.0L);
    long double acc = 0.0L;
    for (int m = 1; m <= terms; ++m) {
      const long double below = innermost ? 1.0L : running[static_cast<std::size_t>(m - 1)];
      acc += below / std::pow(static_cast<long double>(m), static_cast<long double>(*it));
      next[static_cast<std::size_t>(m)] = acc;
    }
    if (std::next(it) == s.rend()) {
      // Outermost variable carries the weight x^n.
      long double total = 0.0L, xn = 1.0L;
      for (int m = 1; m <= terms; ++m) {
        xn *= 0.5L;
        total += xn * (next[static_cast<std::size_t>(m)] - next[static_cast<std::size_t>(m - 1)]);
      }
      return total;
    }
    running = std::move(next);
    innermost = false;
  }
  return 0.0L;
}

}  // namespace

double numeric_mzv(const MzvIndex& idx, double tol) {
  if (!(tol >= kNumericToleranceFloor))
    throw PreconditionError("numeric MZV tolerance must be at least 1e-10");
  if (idx.empty()) return 1.0;
  if (!is_admissible(idx)) throw PreconditionError("numeric_mzv needs an admissible index, got " + format_index(idx));
  Word word;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    word.insert(word.end(), static_cast<std::size_t>(*it - 1), 0);
    word.push_back(1);
  }
  const int terms = 128 + 4 * static_cast<int>(word.size());
  long double total = 0.0L;
  for (std::size_t j = 0; j <= word.size(); ++j) {
    Word head;
    for (std::size_t i = j; i-- > 0;) head.push_back(1 - word[i]);
    const Word tail(word.begin() + static_cast<std::ptrdiff_t>(j), word.end());
    total += polylog_half(head, terms) * polylog_half(tail, terms);
  }
  return static_cast<double>(total);
}

long double extrapolate_truncation(const std::vector<int>& Ms, const std::vector<long double>& values, int log_power) {
  if (Ms.size() != values.size()) throw PreconditionError("ladder and values differ in length");
  if (log_power < 0) throw PreconditionError("log_power must be non-negative");
  const auto n = static_cast<Eigen::Index>(log_power + 2);
  if (static_cast<Eigen::Index>(Ms.size()) < n)
    throw PreconditionError("extrapolation with log power " + std::to_string(log_power) + " needs " +
                            std::to_string(n) + " samples");
  using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  MatrixL a(n, n);
  VectorL b(n);
  const auto offset = static_cast<Eigen::Index>(Ms.size()) - n;
  for (Eigen::Index i = 0; i < n; ++i) {
    const int m = Ms[static_cast<std::size_t>(offset + i)];
    if (m < 2) throw PreconditionError("extrapolation needs M >= 2");
    const long double lm = std::log(static_cast<long double>(m));
    a(i, 0) = 1.0L;
    long double p = 1.0L / static_cast<long double>(m);
    for (Eigen::Index j = 1; j < n; ++j) {
      a(i, j) = p;
      p *= lm;
    }
    b(i) = values[static_cast<std::size_t>(offset + i)];
  }
  return a.fullPivLu().solve(b)(0);
}

MzvEvaluator::MzvEvaluator(double tol) : tol_(tol) {
  if (!(tol >= kNumericToleranceFloor)) throw PreconditionError("numeric MZV tolerance must be at least 1e-10");
}

double MzvEvaluator::operator()(const MzvIndex& idx) {
  if (auto it = cache_.find(idx); it != cache_.end()) return it->second;
  const double v = numeric_mzv(idx, tol_);
  cache_.emplace(idx, v);
  return v;
}

}  // namespace schurmzv
