#include "schurmzv/stuffle.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "schurmzv/errors.hpp"
#include "schurmzv/ssyt.hpp"

namespace schurmzv {

// ---------------------------------------------------------------- QSElement

QSElement::QSElement(const MzvIndex& idx, const Rational& coeff) { add(idx, coeff); }

Rational QSElement::coefficient(const MzvIndex& idx) const {
  const auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QSElement::add(const MzvIndex& idx, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QSElement& QSElement::operator+=(const QSElement& other) {
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

QSElement& QSElement::operator-=(const QSElement& other) {
  for (const auto& [idx, c] : other.terms_) add(idx, Rational(-c));
  return *this;
}

QSElement& QSElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, coeff] : terms_) coeff *= c;
  return *this;
}

QSElement stuffle_product(const MzvIndex& u, const MzvIndex& v) {
  const std::size_t nu = u.size(), nv = v.size();
  // memo[i][j] = u[i..] * v[j..]
  std::vector<std::vector<std::optional<QSElement>>> memo(nu + 1, std::vector<std::optional<QSElement>>(nv + 1));
  auto prepend = [](int part, const QSElement& x, QSElement& into) {
    for (const auto& [idx, c] : x.terms()) {
      MzvIndex w;
      w.reserve(idx.size() + 1);
      w.push_back(part);
      w.insert(w.end(), idx.begin(), idx.end());
      into.add(w, c);
    }
  };
  for (std::size_t i = nu + 1; i-- > 0;)
    for (std::size_t j = nv + 1; j-- > 0;) {
      QSElement out;
      if (i == nu) {
        out = QSElement(MzvIndex(v.begin() + static_cast<std::ptrdiff_t>(j), v.end()));
      } else if (j == nv) {
        out = QSElement(MzvIndex(u.begin() + static_cast<std::ptrdiff_t>(i), u.end()));
      } else {
        prepend(u[i], *memo[i + 1][j], out);
        prepend(v[j], *memo[i][j + 1], out);
        prepend(u[i] + v[j], *memo[i + 1][j + 1], out);
      }
      memo[i][j] = std::move(out);
    }
  return *memo[0][0];
}

QSElement operator*(const QSElement& a, const QSElement& b) {
  QSElement out;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      const Rational c = ca * cb;
      const QSElement prod = stuffle_product(ia, ib);
      for (const auto& [idx, m] : prod.terms()) out.add(idx, c * m);
    }
  return out;
}

double numeric_value(const QSElement& x, MzvEvaluator& eval) {
  double total = 0.0;
  for (const auto& [idx, c] : x.terms()) total += to_double(c) * eval(idx);
  return total;
}

// ---------------------------------------------------------------- TPoly

TPoly::TPoly(QSElement constant) {
  coeffs_.push_back(std::move(constant));
  trim();
}

TPoly TPoly::T() {
  TPoly p;
  p.coeffs_ = {QSElement(), QSElement::unit()};
  return p;
}

const QSElement& TPoly::coefficient(int j) const {
  static const QSElement zero;
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(j)];
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  trim();
  return *this;
}

TPoly& TPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  out.trim();
  return out;
}

// ---------------------------------------------------------------- regularisation

const TPoly& Regularizer::operator()(const MzvIndex& idx) {
  if (auto it = memo_.find(idx); it != memo_.end()) return it->second;
  TPoly result;
  if (is_admissible(idx)) {
    result = TPoly(QSElement(idx));
  } else {
    // idx = (w, 1^s): (1) * (w, 1^{s-1}) contains idx s times, every other
    // term has fewer trailing ones.
    const MzvIndex prev(idx.begin(), idx.end() - 1);
    const QSElement product = stuffle_product(MzvIndex{1}, prev);
    result = TPoly::T() * (*this)(prev);
    for (const auto& [term, c] : product.terms())
      if (term != idx) result -= (*this)(term) * c;
    const Rational s = product.coefficient(idx);
    if (s == 0) throw InternalError("trailing-ones recursion lost its leading term");
    result *= Rational(1 / s);
  }
  return memo_.emplace(idx, std::move(result)).first->second;
}

TPoly Regularizer::operator()(const QSElement& x) {
  TPoly out;
  for (const auto& [idx, c] : x.terms()) out += (*this)(idx) * c;
  return out;
}

namespace {
Regularizer& default_regularizer() {
  thread_local Regularizer r;
  return r;
}
}  // namespace

TPoly regularize(const MzvIndex& idx) { return default_regularizer()(idx); }
TPoly regularize(const QSElement& x) { return default_regularizer()(x); }

TPoly schur_regularize(const Tableau& k) {
  TPoly out;
  for (const auto& [idx, mult] : expand_tableau(k)) out += regularize(idx) * Rational(static_cast<long>(mult));
  return out;
}

double eval_tpoly(const TPoly& p, double t_value, MzvEvaluator& eval) {
  double total = 0.0, tj = 1.0;
  for (const QSElement& c : p.coefficients()) {
    total += tj * numeric_value(c, eval);
    tj *= t_value;
  }
  return total;
}

std::string to_string(const QSElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : x.terms()) {
    const bool negative = c < 0;
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    const Rational mag = abs(c);
    if (idx.empty()) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      out << "z" << format_index(idx);
    }
    first = false;
  }
  return out.str();
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = p.degree(); j >= 0; --j) {
    const QSElement& c = p.coefficient(j);
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    if (j == 0) {
      out << "(" << to_string(c) << ")";
    } else {
      out << "(" << to_string(c) << ")*T" << (j > 1 ? "^" + std::to_string(j) : "");
    }
    first = false;
  }
  return out.str();
}

RegularizedJtReport regularized_jt_check(const DiagonalTableau& k, const OutsideDecomposition& theta,
                                         const std::vector<double>& t_samples, MzvEvaluator& eval) {
  if (!(k.shape() == theta.host)) throw PreconditionError("tableau and decomposition live on different diagrams");
  const SubribbonTable table = subribbon_table(theta);
  const Tableau full = k.to_tableau();
  const TPoly lhs_poly = schur_regularize(full);
  const auto n = static_cast<Eigen::Index>(table.size());
  std::vector<std::vector<TPoly>> entries(table.size(), std::vector<TPoly>(table.size()));
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      const SubribbonEntry& e = table(i, j);
      if (const auto* r = std::get_if<Ribbon>(&e)) {
        entries[i][j] = schur_regularize(fill_ribbon(k, *r));
      } else if (is_empty(e)) {
        entries[i][j] = TPoly(QSElement::unit());
      }
    }
  RegularizedJtReport report;
  report.t_samples = t_samples;
  report.admissible = is_admissible(full);
  for (double t : t_samples) {
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = eval_tpoly(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], t, eval);
    const double det = n == 0 ? 1.0 : m.determinant();
    const double lhs = eval_tpoly(lhs_poly, t, eval);
    report.lhs.push_back(lhs);
    report.rhs.push_back(det);
    report.max_discrepancy = std::max(report.max_discrepancy, std::abs(lhs - det));
  }
  if (!report.rhs.empty()) {
    const auto [lo, hi] = std::minmax_element(report.rhs.begin(), report.rhs.end());
    report.det_t_spread = *hi - *lo;
  }
  return report;
}

}  // namespace schurmzv
