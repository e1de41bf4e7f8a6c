#include "schurmzv/checkerboard.hpp"

#include <algorithm>
#include <functional>

#include "schurmzv/errors.hpp"

namespace schurmzv {

std::string to_string(StairKind kind) {
  switch (kind) {
    case StairKind::A: return "A";
    case StairKind::B: return "B";
    case StairKind::S: return "S";
    case StairKind::SStar: return "S*";
  }
  return "?";
}

StairKind parse_stair_kind(const std::string& text) {
  if (text == "A" || text == "a") return StairKind::A;
  if (text == "B" || text == "b") return StairKind::B;
  if (text == "S" || text == "s") return StairKind::S;
  if (text == "S*" || text == "Sstar" || text == "SStar" || text == "sstar" || text == "s*") return StairKind::SStar;
  throw ParseError("unknown stair kind '" + text + "' (expected A, B, S or S*)");
}

std::string to_string(const StairSpec& s) { return to_string(s.kind) + "(" + std::to_string(s.n) + ")"; }

namespace {

bool starts_with_a(StairKind kind) { return kind == StairKind::A || kind == StairKind::SStar; }
bool odd_length(StairKind kind) { return kind == StairKind::A || kind == StairKind::B; }

}  // namespace

int stair_length(StairKind kind, int n) { return odd_length(kind) ? 2 * n + 1 : 2 * n; }

Ribbon stair_ribbon(StairKind kind, int first_content, int last_content) {
  if (last_content < first_content) throw PreconditionError("empty stair");
  std::vector<Step> steps;
  Step next = starts_with_a(kind) ? Step::Right : Step::Up;
  for (int c = first_content; c < last_content; ++c) {
    steps.push_back(next);
    next = next == Step::Right ? Step::Up : Step::Right;
  }
  return Ribbon(first_content, std::move(steps));
}

Tableau stair_tableau(const StairSpec& spec) {
  if (spec.n < 0) throw PreconditionError("stair size must be non-negative");
  const int len = stair_length(spec.kind, spec.n);
  if (len == 0) throw PreconditionError(to_string(spec) + " is the empty stair");
  const Ribbon r = stair_ribbon(spec.kind, 0, len - 1);
  const int first = starts_with_a(spec.kind) ? spec.a : spec.b;
  const int second = starts_with_a(spec.kind) ? spec.b : spec.a;
  return Tableau::filled(r.shape(), [&](Cell c) { return c.content() % 2 == 0 ? first : second; });
}

std::optional<std::pair<int, int>> checkerboard_values(const DiagonalTableau& k) {
  const auto& diag = k.by_content();
  if (diag.size() < 2) return std::nullopt;
  const int even = diag.begin()->second;
  const int odd = std::next(diag.begin())->second;
  if (even == odd) return std::nullopt;
  const int parity0 = diag.begin()->first;
  for (const auto& [c, v] : diag) {
    if (v != ((c - parity0) % 2 == 0 ? even : odd)) return std::nullopt;
  }
  return std::pair{std::min(even, odd), std::max(even, odd)};
}

Ribbon checkerboard_staircase(const DiagonalTableau& k, int a, int b) {
  const auto& diag = k.by_content();
  if (diag.empty()) throw PreconditionError("empty tableau has no staircase");
  std::vector<Step> steps;
  for (auto it = diag.begin(); std::next(it) != diag.end(); ++it) {
    if (it->second == a) {
      steps.push_back(Step::Right);
    } else if (it->second == b) {
      steps.push_back(Step::Up);
    } else {
      throw PreconditionError("entry " + std::to_string(it->second) + " is neither " + std::to_string(a) + " nor " +
                              std::to_string(b));
    }
  }
  return Ribbon(diag.begin()->first, std::move(steps));
}

StairSpec classify_staircase_slice(const DiagonalTableau& k, int a, int b, int lo, int hi) {
  const int len = hi - lo + 1;
  if (len <= 0) throw PreconditionError("empty slice");
  const int v = k.at_content(lo);
  StairSpec s{StairKind::A, a, b, 0};
  if (v == a) {
    s.kind = len % 2 == 1 ? StairKind::A : StairKind::SStar;
  } else if (v == b) {
    s.kind = len % 2 == 1 ? StairKind::B : StairKind::S;
  } else {
    throw PreconditionError("entry " + std::to_string(v) + " is neither " + std::to_string(a) + " nor " +
                            std::to_string(b));
  }
  s.n = len / 2;
  return s;
}

TessellationResult tessellation_check(const Tableau& t, StairKind kind) {
  const auto values = checkerboard_values(DiagonalTableau::from_tableau(t));
  if (!values) {
    TessellationResult r;
    return r;
  }
  return tessellation_check(t, kind, values->first, values->second);
}

TessellationResult tessellation_check(const Tableau& t, StairKind kind, int a, int b) {
  TessellationResult result;
  const DiagonalTableau k = DiagonalTableau::from_tableau(t);
  const auto& diag = k.by_content();
  if (diag.empty()) return result;
  const int lo = diag.begin()->first;
  const int hi = diag.rbegin()->first;
  result.ribbon = stair_ribbon(kind, lo, hi);
  try {
    result.theta = decomposition_from_ribbon(t.shape(), result.ribbon);
  } catch (const PreconditionError&) {
    return result;
  }
  const int start = starts_with_a(kind) ? a : b;
  const int other = starts_with_a(kind) ? b : a;
  bool ok = true;
  for (const auto& piece : result.theta.pieces) {
    const int plo = piece.front().content();
    const int phi = piece.back().content();
    const int len = phi - plo + 1;
    bool fits = (len % 2 == 1) == odd_length(kind) && Ribbon::from_cells(piece) == stair_ribbon(kind, plo, phi);
    for (const Cell& c : piece) fits = fits && k.at_content(c.content()) == ((c.content() - plo) % 2 == 0 ? start : other);
    if (fits) {
      result.pieces.emplace_back(StairSpec{kind, a, b, len / 2});
    } else {
      result.pieces.emplace_back(std::nullopt);
      ok = false;
    }
  }
  result.ok = ok;
  return result;
}

// ---------------------------------------------------------------- (1,3) closed forms

ZetaSymbolValue zeta_4_power(int n) { return ZetaSymbolValue::term(n == 0 ? Monomial{} : Monomial{{kGenP, n}}, z4_power(n)); }

ZetaSymbolValue zeta_star_4_power(int n) {
  return ZetaSymbolValue::term(n == 0 ? Monomial{} : Monomial{{kGenP, n}}, z4_star_power(n));
}

ZetaSymbolValue closed_form_13(StairKind kind, int n) {
  if (n < 0) throw PreconditionError("stair size must be non-negative");
  const Rational quarter_n = inverse_power(4, static_cast<unsigned long>(n));
  switch (kind) {
    case StairKind::S:
      return zeta_star_4_power(n) * ZetaSymbolValue(quarter_n);
    case StairKind::SStar: {
      ZetaSymbolValue sum;
      for (int k = 0; k <= n; ++k)
        sum += ZetaSymbolValue(inverse_power(4, static_cast<unsigned long>(k))) * zeta_star_4_power(k) *
               zeta_4_power(n - k);
      return sum;
    }
    case StairKind::A:
      if (n == 0) return ZetaSymbolValue::T();
      return ZetaSymbolValue(Rational(2 * quarter_n)) * ZetaSymbolValue::Z(4 * n + 1);
    case StairKind::B:
      return ZetaSymbolValue(quarter_n) * ZetaSymbolValue::Z(4 * n + 3);
  }
  throw InternalError("unhandled stair kind");
}

namespace {

/// Real part of 2i * B_{4n+1}((1 - i)/2); the imaginary part must vanish.
Rational two_i_bernoulli(int n) {
  const GaussianRational x{Rational(1, 2), Rational(-1, 2)};
  const GaussianRational b = bernoulli_poly(4 * n + 1, x);
  if (b.re != 0) throw InternalError("B_{4n+1}((1-i)/2) is not purely imaginary for n = " + std::to_string(n));
  return Rational(-2 * b.im);
}

}  // namespace

ZetaSymbolValue sstar13_bernoulli(int n) {
  if (n < 1) throw PreconditionError("the Bernoulli evaluation of S* needs n >= 1");
  const Rational c = two_i_bernoulli(n) * pow(Rational(4), static_cast<unsigned long>(n)) /
                     Rational(factorial(static_cast<unsigned long>(4 * n + 1)));
  return ZetaSymbolValue::term({{kGenP, n}}, c);
}

ZetaSymbolValue zeta_13_column(int n) {
  if (n < 0) throw PreconditionError("negative column length");
  return zeta_4_power(n) * ZetaSymbolValue(inverse_power(4, static_cast<unsigned long>(n)));
}

ZetaSymbolValue zeta_3_13_column(int n) {
  if (n < 0) throw PreconditionError("negative column length");
  ZetaSymbolValue sum;
  for (int k = 0; k <= n; ++k) {
    Rational c = inverse_power(4, static_cast<unsigned long>(k));
    if (k % 2 == 1) c = -c;
    sum += ZetaSymbolValue(c) * ZetaSymbolValue::Z(4 * k + 3) * zeta_13_column(n - k);
  }
  return sum;
}

Reg13 reg13_formulas(int n) {
  if (n < 0) throw PreconditionError("negative column length");
  Reg13 out;
  const ZetaSymbolValue T = ZetaSymbolValue::T();

  out.ones_tail = zeta_13_column(n) * T;
  for (int j = 1; j <= n; ++j) {
    Rational c = Rational(2) / pow(Rational(4), static_cast<unsigned long>(n));
    if (j % 2 == 1) c = -c;
    out.ones_tail += ZetaSymbolValue(c) * ZetaSymbolValue::Z(4 * j + 1) * zeta_4_power(n - j);
  }

  if (n == 0) {
    out.three_one = ZetaSymbolValue(1);
    return out;
  }
  out.three_one = zeta_3_13_column(n - 1) * T;
  const ZetaSymbolValue sstar = closed_form_13(StairKind::SStar, n);
  out.three_one += n % 2 == 0 ? sstar : -sstar;
  const Rational scale = Rational(8) / pow(Rational(4), static_cast<unsigned long>(n));
  for (int j = 1; j <= n - 1; ++j)
    for (int k = 0; k <= n - 1 - j; ++k) {
      const Rational c = (j + k) % 2 == 0 ? scale : Rational(-scale);
      out.three_one +=
          ZetaSymbolValue(c) * ZetaSymbolValue::Z(4 * j + 1) * ZetaSymbolValue::Z(4 * k + 3) * zeta_4_power(n - j - 1 - k);
    }
  return out;
}

ZetaSymbolValue column_value_13(const MzvIndex& idx) {
  if (idx.empty()) return ZetaSymbolValue(1);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] != 1 && idx[i] != 3) throw PreconditionError("column entries must be 1 or 3");
    if (i > 0 && idx[i] == idx[i - 1]) throw PreconditionError("column entries must alternate");
  }
  const int len = static_cast<int>(idx.size());
  const bool front1 = idx.front() == 1;
  const bool back1 = idx.back() == 1;
  if (front1 && !back1) return zeta_13_column(len / 2);
  if (!front1 && !back1) return zeta_3_13_column(len / 2);
  if (front1 && back1) return reg13_formulas(len / 2).ones_tail;
  return reg13_formulas(len / 2).three_one;
}

// ---------------------------------------------------------------- evaluation

namespace {

void require_checkerboard(const DiagonalTableau& k, int a, int b) {
  if (k.by_content().empty()) throw PreconditionError("empty tableau");
  for (const auto& [c, v] : k.by_content()) {
    if (v != a && v != b)
      throw PreconditionError("entries must be " + std::to_string(a) + " or " + std::to_string(b) + ", got " +
                              std::to_string(v));
    if (k.by_content().contains(c + 1) && k.at_content(c + 1) == v)
      throw PreconditionError("entries of a checkerboard must alternate along contents");
  }
  if (!k.shape().is_edge_connected()) throw PreconditionError("shape is not edge-connected");
}

MzvIndex column_index(const DiagonalTableau& k, const Ribbon& r) {
  MzvIndex idx;
  for (int c = r.last_content(); c >= r.first_content(); --c) idx.push_back(k.at_content(c));
  return idx;
}

/// Fills the matrix of out.theta. `stair_value` resolves staircase slices,
/// column slices go through column_value_13.
void fill_matrix(CheckerboardEvaluation& out, const DiagonalTableau& k, int a, int b, bool column,
                 const std::function<ZetaSymbolValue(const StairSpec&)>& stair_value) {
  const SubribbonTable table = subribbon_table(out.theta);
  const auto n = static_cast<Eigen::Index>(table.size());
  out.matrix = Matrix<ZetaSymbolValue>(n, n);
  out.entry_labels.assign(table.size(), std::vector<std::string>(table.size()));
  bool a0 = false;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const SubribbonEntry& e = table(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      std::string& label = out.entry_labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (is_empty(e)) {
        out.matrix(i, j) = ZetaSymbolValue(1);
        label = "1";
      } else if (is_undefined(e)) {
        out.matrix(i, j) = ZetaSymbolValue(0);
        label = "0";
      } else if (column) {
        const MzvIndex idx = column_index(k, std::get<Ribbon>(e));
        out.matrix(i, j) = column_value_13(idx);
        label = "z" + format_index(idx);
      } else {
        const Ribbon& r = std::get<Ribbon>(e);
        const StairSpec s = classify_staircase_slice(k, a, b, r.first_content(), r.last_content());
        if (s.kind == StairKind::A && s.n == 0 && a == 1) a0 = true;
        out.matrix(i, j) = stair_value(s);
        label = to_string(s);
      }
    }
  out.value = determinant(out.matrix);
  if (a0) out.flags.push_back("A(0) = zeta(1) entered the matrix as T");
  if (out.value.t_degree() > 0) out.flags.push_back("value depends on T: tableau is not admissible");
}

}  // namespace

CheckerboardEvaluation evaluate_checkerboard_13(const Tableau& t, RibbonStrategy strategy) {
  const DiagonalTableau k = DiagonalTableau::from_tableau(t);
  require_checkerboard(k, 1, 3);

  CheckerboardEvaluation out;
  for (StairKind kind : {StairKind::S, StairKind::SStar, StairKind::A, StairKind::B})
    if (tessellation_check(t, kind, 1, 3).ok) out.tessellations.push_back(to_string(kind));

  const bool column = strategy == RibbonStrategy::Column;
  if (column) {
    out.ribbon = Ribbon::straight(k.by_content().begin()->first, k.by_content().rbegin()->first, Step::Up);
    out.ribbon_label = "column";
  } else {
    // Every F-type stair with c(R) = c(k) is a slice of this staircase.
    out.ribbon = checkerboard_staircase(k, 1, 3);
    out.ribbon_label = out.tessellations.empty() ? "staircase" : out.tessellations.front();
  }
  out.theta = decomposition_from_ribbon(t.shape(), out.ribbon);
  fill_matrix(out, k, 1, 3, column, [](const StairSpec& s) { return closed_form_13(s.kind, s.n); });
  return out;
}

CheckerboardEvaluation evaluate_checkerboard_12(const Tableau& t) {
  const DiagonalTableau k = DiagonalTableau::from_tableau(t);
  require_checkerboard(k, 1, 2);

  CheckerboardEvaluation out;
  for (StairKind kind : {StairKind::S, StairKind::SStar, StairKind::A, StairKind::B})
    if (tessellation_check(t, kind, 1, 2).ok) out.tessellations.push_back(to_string(kind));
  out.ribbon = checkerboard_staircase(k, 1, 2);
  out.ribbon_label = out.tessellations.empty() ? "staircase" : out.tessellations.front();
  out.theta = decomposition_from_ribbon(t.shape(), out.ribbon);
  fill_matrix(out, k, 1, 2, false, [](const StairSpec& s) { return closed_form_12(s.kind, s.n); });
  return out;
}

// ---------------------------------------------------------------- (1,2)

ZetaSymbolValue closed_form_12(StairKind kind, int n) {
  if (n < 0) throw PreconditionError("stair size must be non-negative");
  switch (kind) {
    case StairKind::A:
      if (n == 0) return ZetaSymbolValue::T();
      return ZetaSymbolValue(3) * zeta_single(3 * n + 1);
    case StairKind::B:
      throw PreconditionError("B_{1,2}(n) has no closed form in Q[pi^4, zeta(odd)]");
    case StairKind::S: {
      // zeta*({3}^n) from the power sums zeta(3j) by Newton's identity.
      std::vector<ZetaSymbolValue> h{ZetaSymbolValue(1)};
      for (int m = 1; m <= n; ++m) {
        ZetaSymbolValue acc;
        for (int j = 1; j <= m; ++j) acc += zeta_single(3 * j) * h[static_cast<std::size_t>(m - j)];
        h.push_back(acc * ZetaSymbolValue(Rational(1, m)));
      }
      return h[static_cast<std::size_t>(n)];
    }
    case StairKind::SStar: {
      // Sum over partitions of n into odd parts p with multiplicities i_p of
      // prod (2 zeta(3p))^{i_p} / (p^{i_p} i_p!).
      ZetaSymbolValue total;
      std::function<void(int, int, ZetaSymbolValue)> rec = [&](int rest, int p, ZetaSymbolValue acc) {
        if (rest == 0) {
          total += acc;
          return;
        }
        if (p > rest) return;
        const ZetaSymbolValue gen = ZetaSymbolValue(Rational(2, p)) * zeta_single(3 * p);
        ZetaSymbolValue cur = acc;
        for (int i = 0; i * p <= rest; ++i) {
          if (i > 0) cur = cur * gen * ZetaSymbolValue(Rational(1, i));
          rec(rest - i * p, p + 2, cur);
        }
      };
      rec(n, 1, ZetaSymbolValue(1));
      return total;
    }
  }
  throw InternalError("unhandled stair kind");
}

IndexCombination l12(int n) {
  if (n < 1) throw PreconditionError("L_{1,2}(n) needs n >= 1");
  IndexCombination out;
  for (int m = 0; m <= n - 1; ++m) {
    MzvIndex idx(static_cast<std::size_t>(m), 3);
    idx.push_back(4);
    idx.insert(idx.end(), static_cast<std::size_t>(n - 1 - m), 3);
    out[idx] += 3;
  }
  return out;
}

Tableau l12_tableau(int n) {
  if (n < 1) throw PreconditionError("L_{1,2}(n) needs n >= 1");
  const int rows = 2 * n;
  std::vector<int> outer(static_cast<std::size_t>(rows), 2);
  std::vector<int> inner(static_cast<std::size_t>(rows - 1), 1);
  std::vector<std::vector<int>> entries;
  for (int i = 0; i < rows; ++i) entries.push_back({i % 2 == 0 ? 1 : 2});
  entries.back() = {1, 2};
  return Tableau(SkewShape(Partition(outer), Partition(inner)), entries);
}

// ---------------------------------------------------------------- G and alpha

Tableau g13_tableau(int n) {
  if (n < 1) throw PreconditionError("G_{1,3}(n) needs n >= 1");
  std::vector<int> outer{n + 1, n + 1};
  for (int p = n; p >= 2; --p) outer.push_back(p);
  std::vector<int> inner;
  for (int p = n - 2; p >= 1; --p) inner.push_back(p);
  const SkewShape shape{Partition(outer), Partition(inner)};
  return Tableau::filled(shape, [n](Cell c) { return (c.content() + n) % 2 == 0 ? 1 : 3; });
}

ZetaSymbolValue g13(int n) {
  if (n < 1) throw PreconditionError("G_{1,3}(n) needs n >= 1");
  return closed_form_13(StairKind::A, n) * closed_form_13(StairKind::B, n - 1) -
         closed_form_13(StairKind::S, n) * closed_form_13(StairKind::SStar, n);
}

Rational alpha_bernoulli(int n) {
  if (n < 1) throw PreconditionError("alpha_n needs n >= 1");
  const Rational eight_i_b = 4 * two_i_bernoulli(n);
  return Rational(eight_i_b * (8 * n + 1) * Rational(binomial(static_cast<unsigned long>(8 * n), static_cast<unsigned long>(4 * n))) *
                  z4_star_bernoulli_sum(n));
}

Rational alpha_ratio(int n) {
  if (n < 1) throw PreconditionError("alpha_n needs n >= 1");
  const ZetaSymbolValue product = closed_form_13(StairKind::S, n) * closed_form_13(StairKind::SStar, n);
  const Monomial pn{{kGenP, 2 * n}};
  if (product.terms().size() != 1 || product.terms().begin()->first != pn)
    throw InternalError("S(n) S*(n) is not a multiple of pi^{8n}");
  return Rational(product.coefficient(pn) / z4_power(2 * n) * pow(Rational(16), static_cast<unsigned long>(n)));
}

Rational alpha(int n) {
  const Rational a = alpha_bernoulli(n);
  const Rational b = alpha_ratio(n);
  if (a != b) throw InternalError("alpha_" + std::to_string(n) + ": Bernoulli formula " + to_string(a) +
                                  " disagrees with S(n) S*(n) ratio " + to_string(b));
  return a;
}

}  // namespace schurmzv
