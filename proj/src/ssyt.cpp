#include "schurmzv/ssyt.hpp"

#include <map>
#include <string>

namespace schurmzv {

namespace detail {

FillPlan make_fill_plan(const SkewShape& shape) {
  const auto cells = shape.cells();
  std::map<Cell, int> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
  FillPlan plan;
  for (const Cell& c : cells) {
    const auto l = index.find(c.left());
    const auto u = index.find(c.up());
    plan.left.push_back(l == index.end() ? -1 : l->second);
    plan.up.push_back(u == index.end() ? -1 : u->second);
  }
  return plan;
}

void throw_cap_exceeded(std::uint64_t cap) {
  throw ResourceError("tableau enumeration exceeded the cap of " + std::to_string(cap) + " fillings");
}

}  // namespace detail

std::uint64_t for_each_ssyt(const SkewShape& shape, int M, const std::function<void(std::span<const int>)>& visit,
                            std::uint64_t cap) {
  const std::size_t n = shape.size();
  if (n == 0) {
    visit({});
    return 1;
  }
  const detail::FillPlan plan = detail::make_fill_plan(shape);
  std::vector<int> values(n, 0);
  auto lower_bound = [&](std::size_t i) {
    int lo = 1;
    if (plan.left[i] >= 0) lo = std::max(lo, values[static_cast<std::size_t>(plan.left[i])]);
    if (plan.up[i] >= 0) lo = std::max(lo, values[static_cast<std::size_t>(plan.up[i])] + 1);
    return lo;
  };
  std::uint64_t count = 0;
  std::size_t pos = 0;
  values[0] = lower_bound(0);
  while (true) {
    if (values[pos] >= M) {
      if (pos == 0) break;
      --pos;
      ++values[pos];
      continue;
    }
    if (pos + 1 == n) {
      if (++count > cap) detail::throw_cap_exceeded(cap);
      visit(values);
      ++values[pos];
      continue;
    }
    ++pos;
    values[pos] = lower_bound(pos);
  }
  return count;
}

std::vector<std::vector<int>> enumerate_ssyt(const SkewShape& shape, int M, std::uint64_t cap) {
  std::vector<std::vector<int>> out;
  for_each_ssyt(
      shape, M, [&](std::span<const int> v) { out.emplace_back(v.begin(), v.end()); }, cap);
  return out;
}

Rational truncated_schur_zeta(const Tableau& k, int M, std::uint64_t cap) {
  if (k.empty()) return Rational(1);
  if (M <= 1) return Rational(0);
  Integer L = 1;
  for (int m = 2; m < M; ++m) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(m));
  std::map<int, std::vector<Integer>> powers;
  for (int d : k.entries()) {
    auto [it, inserted] = powers.try_emplace(d);
    if (!inserted) continue;
    it->second.resize(static_cast<std::size_t>(M));
    for (int m = 1; m < M; ++m) it->second[static_cast<std::size_t>(m)] = pow(Integer(L / m), static_cast<unsigned long>(d));
  }
  const Integer total = weighted_tableau_sum<Integer>(
      k, M, [&](int m, int d) -> const Integer& { return powers.at(d)[static_cast<std::size_t>(m)]; }, cap);
  Rational out(total, pow(L, static_cast<unsigned long>(k.weight())));
  out.canonicalize();
  return out;
}

SchurPolyReport schur_poly_check(const SkewShape& shape, int M, std::span<const Rational> x, std::uint64_t cap) {
  if (M < 1 || x.size() != static_cast<std::size_t>(M - 1))
    throw PreconditionError("schur_poly_check needs exactly M-1 variables");
  SchurPolyReport report;
  const Tableau ones = Tableau::filled(shape, [](Cell) { return 1; });
  report.lhs = weighted_tableau_sum<Rational>(
      ones, M, [&](int m, int) -> const Rational& { return x[static_cast<std::size_t>(m - 1)]; }, cap);
  // h[d] = complete homogeneous symmetric polynomial of degree d in x.
  const int top = shape.outer()[1] + shape.rows();
  std::vector<Rational> h(static_cast<std::size_t>(top + 1), Rational(0));
  h[0] = 1;
  for (const Rational& xi : x)
    for (int d = 1; d <= top; ++d) h[static_cast<std::size_t>(d)] += xi * h[static_cast<std::size_t>(d - 1)];
  const int n = shape.rows();
  Matrix<Rational> m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int d = shape.outer()[i] - shape.inner()[j] - i + j;
      m(i - 1, j - 1) = d < 0 ? Rational(0) : h[static_cast<std::size_t>(d)];
    }
  report.rhs = bareiss_determinant(m);
  report.equal = report.lhs == report.rhs;
  return report;
}

JacobiTrudiReport jacobi_trudi_check_exact(const DiagonalTableau& k, const OutsideDecomposition& theta, int M,
                                           std::uint64_t cap) {
  if (!(k.shape() == theta.host)) throw PreconditionError("tableau and decomposition live on different diagrams");
  if (!theta.host.is_edge_connected()) throw PreconditionError("host diagram is not edge-connected");
  const SubribbonTable table = subribbon_table(theta);
  JacobiTrudiReport report;
  report.lhs = truncated_schur_zeta(k.to_tableau(), M, cap);
  report.matrix = jacobi_trudi_matrix<Rational>(k, table, [&](const Tableau& t) { return truncated_schur_zeta(t, M, cap); });
  report.rhs = bareiss_determinant(report.matrix);
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace schurmzv
