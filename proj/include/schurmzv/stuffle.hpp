#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurmzv/mzv.hpp"
#include "schurmzv/rational.hpp"
#include "schurmzv/ribbons.hpp"

namespace schurmzv {

/// Formal Q-linear combination of indices; the empty index is the unit.
class QSElement {
 public:
  QSElement() = default;
  explicit QSElement(const MzvIndex& idx, const Rational& coeff = Rational(1));
  static QSElement unit() { return QSElement(MzvIndex{}); }

  const std::map<MzvIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MzvIndex& idx) const;

  void add(const MzvIndex& idx, const Rational& coeff);
  QSElement& operator+=(const QSElement& other);
  QSElement& operator-=(const QSElement& other);
  QSElement& operator*=(const Rational& c);

  friend QSElement operator+(QSElement a, const QSElement& b) { return a += b; }
  friend QSElement operator-(QSElement a, const QSElement& b) { return a -= b; }
  friend QSElement operator*(QSElement a, const Rational& c) { return a *= c; }
  /// Stuffle product, extended bilinearly.
  friend QSElement operator*(const QSElement& a, const QSElement& b);

  bool operator==(const QSElement&) const = default;

 private:
  std::map<MzvIndex, Rational> terms_;
};

/// The quasi-shuffle u * v: interleavings where a part of u and a part of v
/// may merge into their sum.
QSElement stuffle_product(const MzvIndex& u, const MzvIndex& v);

template <class Scalar = Rational>
Scalar truncated_value(const QSElement& x, int M) {
  Scalar total(0);
  for (const auto& [idx, c] : x.terms()) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      total += c * truncated_mzv<Rational>(idx, M);
    } else {
      total += static_cast<Scalar>(to_double(c)) * truncated_mzv<Scalar>(idx, M);
    }
  }
  return total;
}

double numeric_value(const QSElement& x, MzvEvaluator& eval);

/// Polynomial in T whose coefficients are combinations of admissible
/// indices: coefficients()[j] multiplies T^j.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(QSElement constant);
  static TPoly T();

  const std::vector<QSElement>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const QSElement& coefficient(int j) const;

  TPoly& operator+=(const TPoly& other);
  TPoly& operator-=(const TPoly& other);
  TPoly& operator*=(const Rational& c);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);

  bool operator==(const TPoly&) const = default;

 private:
  void trim();
  std::vector<QSElement> coeffs_;
};

/// Harmonic regularisation normalised by (1) -> T. Results are memoised.
class Regularizer {
 public:
  const TPoly& operator()(const MzvIndex& idx);
  TPoly operator()(const QSElement& x);

 private:
  std::map<MzvIndex, TPoly> memo_;
};

/// Uses a thread-local Regularizer.
TPoly regularize(const MzvIndex& idx);
TPoly regularize(const QSElement& x);

/// Regularisation of a Schur tableau: regularise its MZV expansion termwise.
TPoly schur_regularize(const Tableau& k);

double eval_tpoly(const TPoly& p, double t_value, MzvEvaluator& eval);

/// "2*z(1,3)*T^1 - z(3)" style text.
std::string to_string(const QSElement& x);
std::string to_string(const TPoly& p);

struct RegularizedJtReport {
  std::vector<double> t_samples;
  std::vector<double> lhs;       ///< regularised value of k at each sample
  std::vector<double> rhs;       ///< determinant at each sample
  double max_discrepancy = 0.0;  ///< max |lhs - rhs|
  double det_t_spread = 0.0;     ///< max - min of the determinant over samples
  bool admissible = false;
};

RegularizedJtReport regularized_jt_check(const DiagonalTableau& k, const OutsideDecomposition& theta,
                                         const std::vector<double>& t_samples, MzvEvaluator& eval);

}  // namespace schurmzv
