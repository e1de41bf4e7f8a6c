#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurmzv/mzv.hpp"
#include "schurmzv/ribbons.hpp"
#include "schurmzv/symbolic.hpp"

namespace schurmzv {

/// A and S* stairs start with a and step right first; B and S stairs start
/// with b and step up first. A and B have 2n + 1 boxes, S and S* have 2n.
enum class StairKind { A, B, S, SStar };

std::string to_string(StairKind kind);
/// Accepts "A", "B", "S", "S*", "Sstar", "SStar". Throws ParseError.
StairKind parse_stair_kind(const std::string& text);

struct StairSpec {
  StairKind kind = StairKind::A;
  int a = 1;
  int b = 3;
  int n = 0;

  bool operator==(const StairSpec&) const = default;
};

std::string to_string(const StairSpec& s);

int stair_length(StairKind kind, int n);

/// The stair walk of `kind` covering contents [first, last].
Ribbon stair_ribbon(StairKind kind, int first_content, int last_content);

/// Throws PreconditionError for S or S* with n = 0 (the empty stair).
Tableau stair_tableau(const StairSpec& spec);

/// The two alternating values of a diagonal-constant tableau as (smaller,
/// larger), or nothing if the tableau is not a checkerboard.
std::optional<std::pair<int, int>> checkerboard_values(const DiagonalTableau& k);

/// The ribbon stepping right after every a and up after every b.
Ribbon checkerboard_staircase(const DiagonalTableau& k, int a, int b);

/// Stair type of the walk [lo, hi] of the staircase of k.
StairSpec classify_staircase_slice(const DiagonalTableau& k, int a, int b, int lo, int hi);

struct TessellationResult {
  bool ok = false;
  Ribbon ribbon;
  OutsideDecomposition theta;
  std::vector<std::optional<StairSpec>> pieces;  ///< nothing for a non-F piece
};

/// Decomposes along the F-type stair with the host's contents and reports
/// whether every piece is a complete F stair. a, b default to the smaller
/// and larger checkerboard value.
TessellationResult tessellation_check(const Tableau& t, StairKind kind);
TessellationResult tessellation_check(const Tableau& t, StairKind kind, int a, int b);

// ---------------------------------------------------------------- (1,3) closed forms

/// A_{1,3}(n), B_{1,3}(n), S_{1,3}(n), S*_{1,3}(n) with the n = 0
/// conventions A(0) = T, B(0) = Z_3, S(0) = S*(0) = 1.
ZetaSymbolValue closed_form_13(StairKind kind, int n);

/// S*_{1,3}(n) from the Bernoulli polynomial at (1 - i)/2. Throws
/// InternalError if the value is not real.
ZetaSymbolValue sstar13_bernoulli(int n);

/// zeta({4}^n) and zeta*({4}^n).
ZetaSymbolValue zeta_4_power(int n);
ZetaSymbolValue zeta_star_4_power(int n);

/// zeta({1,3}^n) and zeta(3, {1,3}^n).
ZetaSymbolValue zeta_13_column(int n);
ZetaSymbolValue zeta_3_13_column(int n);

struct Reg13 {
  ZetaSymbolValue ones_tail;  ///< regularised zeta({1,3}^n, 1)
  ZetaSymbolValue three_one;  ///< regularised zeta({3,1}^n)
};

Reg13 reg13_formulas(int n);

/// Value of a column whose entries, read top to bottom, alternate 1 and 3.
ZetaSymbolValue column_value_13(const MzvIndex& top_to_bottom);

// ---------------------------------------------------------------- evaluation

enum class RibbonStrategy { Auto, Staircase, Column };

struct CheckerboardEvaluation {
  ZetaSymbolValue value;
  std::string ribbon_label;  ///< "S", "S*", "A", "B", "staircase" or "column"
  Ribbon ribbon;
  OutsideDecomposition theta;
  Matrix<ZetaSymbolValue> matrix;
  std::vector<std::vector<std::string>> entry_labels;
  std::vector<std::string> tessellations;  ///< kinds that tessellate the tableau
  std::vector<std::string> flags;
};

/// Regularised value of a 1-3 checkerboard tableau in Q[pi^4, zeta(odd)][T].
/// Auto uses the staircase ribbon (R after 1, U after 3), which is the F-type
/// stair whenever some F tessellates t.
CheckerboardEvaluation evaluate_checkerboard_13(const Tableau& t, RibbonStrategy strategy = RibbonStrategy::Auto);

/// The same for a 1-2 checkerboard. Throws PreconditionError when some
/// staircase entry has no closed form (B stairs, zeta(2 mod 4)).
CheckerboardEvaluation evaluate_checkerboard_12(const Tableau& t);

// ---------------------------------------------------------------- (1,2)

/// A_{1,2}(n) = 3 zeta(3n+1), S*_{1,2}(n) = zeta*({1,2}^n) and
/// S_{1,2}(n) = zeta*({3}^n). Throws PreconditionError for B and for values
/// that need zeta(2 mod 4).
ZetaSymbolValue closed_form_12(StairKind kind, int n);

/// L_{1,2}(n) = 3 sum_{l+m=n-1} zeta({3}^m, 4, {3}^l) as an index combination.
IndexCombination l12(int n);

/// The column {1,2}^n with an extra 1 to the left of its bottom box.
Tableau l12_tableau(int n);

// ---------------------------------------------------------------- G and alpha

/// Shape (n+1, n+1, n, ..., 2)/(n-2, ..., 1) filled 1, 3 alternately.
Tableau g13_tableau(int n);

/// det((A(n), S(n)), (S*(n), B(n-1))).
ZetaSymbolValue g13(int n);

/// alpha_n from the Bernoulli formula.
Rational alpha_bernoulli(int n);
/// alpha_n = S(n) S*(n) / zeta({1,3}^{2n}) computed in Q[P].
Rational alpha_ratio(int n);
/// Both of the above; a mismatch is an InternalError.
Rational alpha(int n);

}  // namespace schurmzv
