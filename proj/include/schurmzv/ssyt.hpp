#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "schurmzv/determinant.hpp"
#include "schurmzv/errors.hpp"
#include "schurmzv/rational.hpp"
#include "schurmzv/ribbons.hpp"
#include "schurmzv/shapes.hpp"

namespace schurmzv {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

namespace detail {

/// Neighbour indices into shape.cells() used to bound each value from below.
struct FillPlan {
  std::vector<int> left;
  std::vector<int> up;
};

FillPlan make_fill_plan(const SkewShape& shape);

[[noreturn]] void throw_cap_exceeded(std::uint64_t cap);

}  // namespace detail

/// Calls `visit` once for each semi-standard filling with values < M, in
/// lexicographic order of the row-major reading word. Returns the count.
std::uint64_t for_each_ssyt(const SkewShape& shape, int M, const std::function<void(std::span<const int>)>& visit,
                            std::uint64_t cap = kDefaultEnumerationCap);

std::vector<std::vector<int>> enumerate_ssyt(const SkewShape& shape, int M, std::uint64_t cap = kDefaultEnumerationCap);

/// S_f^M(k) = sum over restricted SSYT of prod f(m_ij, k_ij), over any
/// commutative ring with Ring(0), Ring(1), + and *. The empty tableau gives 1.
template <class Ring, class WeightFn>
Ring weighted_tableau_sum(const Tableau& k, int M, WeightFn&& f, std::uint64_t cap = kDefaultEnumerationCap) {
  const SkewShape& shape = k.shape();
  const std::vector<int> entries = k.entries();
  const std::size_t n = entries.size();
  if (n == 0) return Ring(1);
  const detail::FillPlan plan = detail::make_fill_plan(shape);
  std::vector<int> values(n, 0);
  std::vector<Ring> prefix(n + 1, Ring(1));
  Ring total(0);
  std::uint64_t count = 0;
  // Iterative depth-first search; values[pos] is the next candidate at pos.
  std::size_t pos = 0;
  auto lower_bound = [&](std::size_t i) {
    int lo = 1;
    if (plan.left[i] >= 0) lo = std::max(lo, values[static_cast<std::size_t>(plan.left[i])]);
    if (plan.up[i] >= 0) lo = std::max(lo, values[static_cast<std::size_t>(plan.up[i])] + 1);
    return lo;
  };
  values[0] = lower_bound(0);
  while (true) {
    if (values[pos] >= M) {
      if (pos == 0) break;
      --pos;
      ++values[pos];
      continue;
    }
    prefix[pos + 1] = prefix[pos] * f(values[pos], entries[pos]);
    if (pos + 1 == n) {
      total += prefix[n];
      if (++count > cap) detail::throw_cap_exceeded(cap);
      ++values[pos];
      continue;
    }
    ++pos;
    values[pos] = lower_bound(pos);
  }
  return total;
}

/// zeta_M(k): the weight m^{-d}, computed exactly over a common denominator.
Rational truncated_schur_zeta(const Tableau& k, int M, std::uint64_t cap = kDefaultEnumerationCap);

struct SchurPolyReport {
  Rational lhs;  ///< SSYT sum with f(m, d) = x_m
  Rational rhs;  ///< det(h_{lambda_i - mu_j - i + j}(x))
  bool equal = false;
};

/// x holds x_1, ..., x_{M-1}.
SchurPolyReport schur_poly_check(const SkewShape& shape, int M, std::span<const Rational> x,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// The n x n matrix of a Jacobi-Trudi expansion: undefined entries are 0,
/// empty ones 1, and ribbons are filled from k and passed to `value`.
template <class Scalar, class ValueFn>
Matrix<Scalar> jacobi_trudi_matrix(const DiagonalTableau& k, const SubribbonTable& table, ValueFn&& value) {
  const auto n = static_cast<Eigen::Index>(table.size());
  Matrix<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const SubribbonEntry& e = table(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (const auto* r = std::get_if<Ribbon>(&e)) {
        m(i, j) = value(fill_ribbon(k, *r));
      } else {
        m(i, j) = Scalar(is_empty(e) ? 1 : 0);
      }
    }
  return m;
}

struct JacobiTrudiReport {
  Rational lhs;
  Rational rhs;
  bool equal = false;
  Matrix<Rational> matrix;
};

JacobiTrudiReport jacobi_trudi_check_exact(const DiagonalTableau& k, const OutsideDecomposition& theta, int M,
                                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace schurmzv
