#pragma once

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schurmzv/rational.hpp"
#include "schurmzv/shapes.hpp"

namespace schurmzv {

/// (k_1, ..., k_r) summed over 0 < m_1 < ... < m_r, so k_r sits on the
/// largest summation variable. The empty index stands for 1.
using MzvIndex = std::vector<int>;

/// Formal sum of indices with positive integer multiplicities.
using IndexCombination = std::map<MzvIndex, long long>;

bool is_admissible(const MzvIndex& idx);
int weight(const MzvIndex& idx);

/// "(1,3)"; the empty index prints as "()".
std::string format_index(const MzvIndex& idx);
/// Accepts "1,3", "(1,3)" or "1 3". Throws ParseError.
MzvIndex parse_index(std::string_view text);

namespace detail {

template <class Scalar>
Scalar inverse_power_as(int m, int d) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return inverse_power(static_cast<unsigned long>(m), static_cast<unsigned long>(d));
  } else {
    return Scalar(1) / std::pow(Scalar(m), Scalar(d));
  }
}

template <class Scalar>
Scalar truncated_sum(const MzvIndex& idx, int M, bool strict) {
  if (idx.empty()) return Scalar(1);
  if (M <= 1) return Scalar(0);
  // running[m] = sum over admissible chains whose last variable is <= m.
  std::vector<Scalar> running(static_cast<std::size_t>(M), Scalar(1));
  running[0] = Scalar(0);
  bool first = true;
  for (int k : idx) {
    std::vector<Scalar> next(static_cast<std::size_t>(M), Scalar(0));
    Scalar acc(0);
    for (int m = 1; m < M; ++m) {
      const Scalar& below = first ? Scalar(1) : running[static_cast<std::size_t>(strict ? m - 1 : m)];
      acc += Scalar(below * inverse_power_as<Scalar>(m, k));
      next[static_cast<std::size_t>(m)] = acc;
    }
    running = std::move(next);
    first = false;
  }
  return running[static_cast<std::size_t>(M - 1)];
}

}  // namespace detail

/// zeta_M(k_1..k_r) = sum_{0 < m_1 < ... < m_r < M} prod m_i^{-k_i}.
/// Scalar is Rational for exact values or a floating type.
template <class Scalar = Rational>
Scalar truncated_mzv(const MzvIndex& idx, int M) {
  return detail::truncated_sum<Scalar>(idx, M, true);
}

/// The weak-inequality analogue zeta*_M.
template <class Scalar = Rational>
Scalar truncated_mzsv(const MzvIndex& idx, int M) {
  return detail::truncated_sum<Scalar>(idx, M, false);
}

/// Splits a tableau into truncated MZVs: one index per ordered set partition
/// of the boxes into blocks of equal summation variable compatible with
/// the semi-standard inequalities.
IndexCombination expand_tableau(const Tableau& k);

template <class Scalar = Rational>
Scalar truncated_from_expansion(const IndexCombination& combo, int M) {
  Scalar total(0);
  for (const auto& [idx, mult] : combo) total += Scalar(Scalar(static_cast<long>(mult)) * truncated_mzv<Scalar>(idx, M));
  return total;
}

/// Limit of a truncated sequence from samples (M_i, z_i), fitting
/// z_M = z + sum_{j <= log_power} c_j log^j(M) / M exactly through the last
/// log_power + 2 samples. log_power = 0 on a doubling ladder is the classical
/// Richardson step 2 z_M - z_{M/2}.
long double extrapolate_truncation(const std::vector<int>& Ms, const std::vector<long double>& values, int log_power);

inline constexpr double kNumericToleranceFloor = 1e-10;

/// zeta(idx) for admissible idx by the Hoelder convolution of the
/// iterated-integral word at 1/2; the result is accurate to about 1e-15.
/// Throws PreconditionError for non-admissible idx or tol below the floor.
double numeric_mzv(const MzvIndex& idx, double tol = kNumericToleranceFloor);

/// Memoising front end for numeric_mzv. Not thread safe.
class MzvEvaluator {
 public:
  explicit MzvEvaluator(double tol = kNumericToleranceFloor);
  double operator()(const MzvIndex& idx);
  double tolerance() const { return tol_; }

 private:
  double tol_;
  std::map<MzvIndex, double> cache_;
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace schurmzv
