#pragma once

#include <Eigen/Core>
#include <bit>
#include <cstdint>
#include <vector>

#include "schurmzv/errors.hpp"

namespace schurmzv {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Fraction-free elimination. Every division is exact over an integral
/// domain; over a field it is ordinary Gaussian elimination in disguise.
template <class Scalar>
Scalar bareiss_determinant(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  const Scalar zero(0);
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == zero) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == zero) ++p;
      if (p == n) return zero;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = a(i, j) * a(k, k);
        num -= Scalar(a(i, k) * a(k, j));
        a(i, j) = Scalar(num / prev);
      }
      a(i, k) = zero;
    }
    prev = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

/// Laplace expansion along rows, memoised on the set of used columns.
/// Needs only ring operations, so it works over polynomial rings.
template <class Scalar>
Scalar cofactor_determinant(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw PreconditionError("determinant of a non-square matrix");
  if (n > 20) throw ResourceError("cofactor determinant limited to 20x20 matrices");
  const Scalar zero(0);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<Scalar> partial(static_cast<std::size_t>(full) + 1, zero);
  std::vector<bool> reached(partial.size(), false);
  partial[0] = Scalar(1);
  reached[0] = true;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!reached[mask]) continue;
    const int row = std::popcount(mask);
    for (int col = 0; col < n; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if ((mask & bit) || a(row, col) == zero) continue;
      const bool negative = std::popcount(mask >> (col + 1)) % 2 == 1;
      Scalar term = partial[mask] * a(row, col);
      if (negative) {
        partial[mask | bit] -= term;
      } else {
        partial[mask | bit] += term;
      }
      reached[mask | bit] = true;
    }
  }
  return partial[full];
}

}  // namespace schurmzv
