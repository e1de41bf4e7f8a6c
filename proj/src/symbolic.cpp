#include "schurmzv/symbolic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <vector>

#include "schurmzv/errors.hpp"

namespace schurmzv {

int weight(const Monomial& m) {
  int w = 0;
  for (const auto& [g, e] : m) w += e * (g == kGenP ? 4 : g == kGenT ? 1 : g);
  return w;
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out << '*';
    out << s;
    first = false;
  };
  // pi first, then zetas by index, then T.
  if (const auto it = m.find(kGenP); it != m.end()) emit("pi^" + std::to_string(4 * it->second));
  for (const auto& [g, e] : m) {
    if (g == kGenP || g == kGenT) continue;
    emit("z" + std::to_string(g) + (e > 1 ? "^" + std::to_string(e) : ""));
  }
  if (const auto it = m.find(kGenT); it != m.end()) emit(it->second > 1 ? "T^" + std::to_string(it->second) : "T");
  return out.str();
}

// ---------------------------------------------------------------- ZetaSymbolValue

ZetaSymbolValue::ZetaSymbolValue(int c) : ZetaSymbolValue(Rational(c)) {}

ZetaSymbolValue::ZetaSymbolValue(const Rational& c) { add({}, c); }

ZetaSymbolValue ZetaSymbolValue::P(int power) {
  if (power < 0) throw PreconditionError("negative power of pi^4");
  return power == 0 ? ZetaSymbolValue(1) : term({{kGenP, power}}, Rational(1));
}

ZetaSymbolValue ZetaSymbolValue::T() { return term({{kGenT, 1}}, Rational(1)); }

ZetaSymbolValue ZetaSymbolValue::Z(int k) {
  if (k < 3 || k % 2 == 0) throw PreconditionError("Z_k is a generator only for odd k >= 3, got " + std::to_string(k));
  return term({{k, 1}}, Rational(1));
}

ZetaSymbolValue ZetaSymbolValue::term(const Monomial& m, const Rational& c) {
  ZetaSymbolValue v;
  v.add(m, c);
  return v;
}

void ZetaSymbolValue::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ZetaSymbolValue::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<int> ZetaSymbolValue::generators() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [g, e] : m) out.insert(g);
  return out;
}

std::set<int> ZetaSymbolValue::weights() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) out.insert(weight(m));
  return out;
}

bool ZetaSymbolValue::is_homogeneous(int w) const {
  for (const auto& [m, c] : terms_)
    if (weight(m) != w) return false;
  return true;
}

int ZetaSymbolValue::t_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    if (const auto it = m.find(kGenT); it != m.end()) d = std::max(d, it->second);
  return d;
}

double ZetaSymbolValue::numeric(double t, MzvEvaluator& eval) const {
  const long double pi4 = std::pow(std::numbers::pi_v<long double>, 4);
  long double total = 0.0L;
  for (const auto& [m, c] : terms_) {
    long double term = to_double(c);
    for (const auto& [g, e] : m) {
      const long double base = g == kGenP ? pi4 : g == kGenT ? static_cast<long double>(t) : eval(MzvIndex{g});
      term *= std::pow(base, static_cast<long double>(e));
    }
    total += term;
  }
  return static_cast<double>(total);
}

ZetaSymbolValue& ZetaSymbolValue::operator+=(const ZetaSymbolValue& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ZetaSymbolValue& ZetaSymbolValue::operator-=(const ZetaSymbolValue& o) {
  for (const auto& [m, c] : o.terms_) add(m, Rational(-c));
  return *this;
}

ZetaSymbolValue& ZetaSymbolValue::operator*=(const ZetaSymbolValue& o) {
  ZetaSymbolValue out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [g, e] : mb) m[g] += e;
      out.add(m, ca * cb);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

ZetaSymbolValue ZetaSymbolValue::operator-() const {
  ZetaSymbolValue out;
  return out -= *this;
}

std::string to_string(const ZetaSymbolValue& v) {
  if (v.is_zero()) return "0";
  // Highest weight first; ties in map order.
  std::vector<std::pair<Monomial, Rational>> terms(v.terms().begin(), v.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return weight(a.first) > weight(b.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << '-';
    const Rational mag = abs(c);
    if (m.empty()) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << '*';
      out << to_string(m);
    }
    first = false;
  }
  return out.str();
}

ZetaSymbolValue power(const ZetaSymbolValue& v, int n) {
  if (n < 0) throw PreconditionError("negative power in the symbol ring");
  ZetaSymbolValue out(1);
  for (int i = 0; i < n; ++i) out *= v;
  return out;
}

Rational even_zeta_pi4_coefficient(int q) {
  if (q < 1) throw PreconditionError("zeta(4q) needs q >= 1");
  const auto k = static_cast<unsigned long>(4 * q);
  Rational c = -bernoulli_number(4 * q) * Rational(pow(Integer(2), k - 1), factorial(k));
  c.canonicalize();
  return c;
}

ZetaSymbolValue zeta_single(int k) {
  if (k == 1) return ZetaSymbolValue::T();
  if (k >= 3 && k % 2 == 1) return ZetaSymbolValue::Z(k);
  if (k >= 4 && k % 4 == 0) return ZetaSymbolValue::P(k / 4) * ZetaSymbolValue(even_zeta_pi4_coefficient(k / 4));
  throw PreconditionError("zeta(" + std::to_string(k) + ") has no image in Q[pi^4, zeta(3), zeta(5), ...]");
}

// ---------------------------------------------------------------- Gaussian rationals

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  const Rational r = re * o.re - im * o.im;
  const Rational i = re * o.im + im * o.re;
  re = r;
  im = i;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  const std::string im = to_string(abs(z.im)) + "*i";
  if (z.re == 0) return (z.im < 0 ? "-" : "") + im;
  return to_string(z.re) + (z.im < 0 ? " - " : " + ") + im;
}

Rational bernoulli_number(int k) {
  if (k < 0) throw PreconditionError("Bernoulli index must be non-negative");
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= k) {
    const auto m = static_cast<unsigned long>(cache.size());
    Rational s = 0;
    for (unsigned long j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
    Rational b = -s / Rational(static_cast<long>(m + 1));
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[static_cast<std::size_t>(k)];
}

GaussianRational bernoulli_poly(int k, const GaussianRational& x) {
  if (k < 0) throw PreconditionError("Bernoulli index must be non-negative");
  // Horner in x: B_k(x) = sum_{j} C(k, j) B_{k-j} x^j.
  GaussianRational acc{Rational(0), Rational(0)};
  for (int j = k; j >= 0; --j) {
    acc *= x;
    acc.re += Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j))) * bernoulli_number(k - j);
  }
  acc.re.canonicalize();
  acc.im.canonicalize();
  return acc;
}

Rational z4_power(int n) {
  if (n < 0) throw PreconditionError("z4_power needs n >= 0");
  const auto un = static_cast<unsigned long>(n);
  Rational r(pow(Integer(2), 2 * un + 1), factorial(4 * un + 2));
  r.canonicalize();
  return r;
}

Rational z4_star_bernoulli_sum(int n) {
  if (n < 0) throw PreconditionError("z4_star_bernoulli_sum needs n >= 0");
  const int N = 4 * n;
  auto two_pow = [](int e) {
    return e >= 0 ? Rational(pow(Integer(2), static_cast<unsigned long>(e)))
                  : Rational(Integer(1), pow(Integer(2), static_cast<unsigned long>(-e)));
  };
  Rational s = 0;
  for (int j = 0; j <= 2 * n; ++j) {
    Rational term = Rational(1 - two_pow(2 * j - 1)) * Rational(1 - two_pow(N - 2 * j - 1)) *
                    Rational(binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(2 * j))) *
                    bernoulli_number(2 * j) * bernoulli_number(N - 2 * j);
    if (j % 2 == 1) term = -term;
    s += term;
  }
  s.canonicalize();
  return s;
}

Rational z4_star_power(int n) {
  if (n < 0) throw PreconditionError("z4_star_power needs n >= 0");
  Rational r = Rational(4) * z4_star_bernoulli_sum(n) / Rational(factorial(static_cast<unsigned long>(4 * n)));
  r.canonicalize();
  return r;
}

ZetaSymbolValue determinant(const Matrix<ZetaSymbolValue>& m) { return cofactor_determinant(m); }

}  // namespace schurmzv
