#include "nilforms/families.hpp"

#include <stdexcept>
#include <string>

namespace nilforms {

namespace {

ParamTablePtr table_of(const std::vector<PolyScalar>& coeffs) {
  for (const PolyScalar& c : coeffs) {
    if (c.table()) return c.table();
  }
  return nullptr;
}

Form pair_blade(int n, int j) {
  return wedge(Form::generator(n, j, false), Form::generator(n, j, true));
}

// solves a residual form that is (at most) linear in the parameter `x`:
// every coefficient must vanish at the common root
GaussianRational solve_residual(const Form& residual, const ParamTablePtr& table,
                                const std::string& x) {
  const PolyScalar* pivot = nullptr;
  for (const auto& [b, c] : residual.terms()) {
    (void)b;
    if (c.degree_in(*table->find(x)) == 1) {
      pivot = &c;
      break;
    }
  }
  if (!pivot) throw std::domain_error("condition does not involve '" + x + "'");
  RatScalar root = solve_linear(*pivot, x);
  if (!root.is_constant())
    throw std::domain_error("condition is not numeric in '" + x + "'");
  GaussianRational value = root.constant_value();
  Assignment at(table);
  at.set(x, value);
  for (const auto& [b, c] : residual.terms()) {
    (void)b;
    if (!c.substitute(at).is_zero())
      throw std::domain_error("condition has no solution in '" + x + "'");
  }
  return value;
}

}  // namespace

bool HeisenbergFamily::nonzero_hypothesis() const {
  for (const PolyScalar& c : a) {
    if (c.is_constant() && c.constant_value().is_zero()) return false;
  }
  return true;
}

StructureEquations HeisenbergFamily::build() const {
  return build_heisenberg(n, a);
}

StructureEquations build_heisenberg(int n, const std::vector<PolyScalar>& a) {
  if (n < 3) throw std::invalid_argument("family needs dimension at least 3");
  if (int(a.size()) != n - 1)
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " coefficients");
  std::vector<Form> d_gen(size_t(n), Form::zero(n));
  Form dn(n);
  for (int j = 1; j < n; ++j) dn += pair_blade(n, j).scaled(a[size_t(j - 1)]);
  d_gen[size_t(n - 1)] = dn;
  return StructureEquations(n, std::move(d_gen), table_of(a));
}

PolyScalar balanced_constraint(const std::vector<PolyScalar>& a) {
  PolyScalar sum;
  for (const PolyScalar& c : a) sum += c;
  return sum;
}

GaussianRational solve_balanced_tail(const std::vector<GaussianRational>& head) {
  GaussianRational sum;
  for (const GaussianRational& c : head) sum += c;
  return -sum;
}

HermitianMetric solve_astheno_diagonal(int n, const std::vector<Rational>& a) {
  if (n == 3) throw std::domain_error("no solvable coefficient in dimension 3");
  if (n < 4) throw std::invalid_argument("family needs dimension at least 4");
  if (int(a.size()) != n - 1)
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " coefficients");
  Rational sum(0);
  for (int j = 0; j < n - 2; ++j) {
    if (!(a[size_t(j)] > 0))
      throw std::domain_error("coefficient " + std::to_string(j + 1) + " must be positive");
    sum += a[size_t(j)];
  }
  if (a[size_t(n - 2)] != -sum)
    throw std::domain_error("coefficients do not satisfy the balanced condition");

  std::vector<PolyScalar> coeffs;
  for (const Rational& r : a) coeffs.emplace_back(GaussianRational(r));
  StructureEquations S = build_heisenberg(n, coeffs);

  ParamTablePtr table = ParamTableBuilder().real("b").freeze();
  std::vector<PolyScalar> diag;
  for (int j = 0; j < n - 2; ++j) diag.emplace_back(GaussianRational(a[size_t(j)]));
  diag.push_back(PolyScalar::symbol(table, "b"));
  diag.emplace_back(GaussianRational(1));
  Form residual =
      S.del(S.delbar(power(HermitianMetric::diagonal(n, diag).fundamental_form(),
                           unsigned(n - 2))));
  GaussianRational b = solve_residual(residual, table, "b");

  std::vector<PolyScalar> solved;
  for (int j = 0; j < n - 2; ++j) solved.emplace_back(GaussianRational(a[size_t(j)]));
  solved.emplace_back(b);
  solved.emplace_back(GaussianRational(1));
  HermitianMetric M = HermitianMetric::diagonal(n, std::move(solved));

  if (!is_astheno_kahler(S, M).holds())
    throw std::logic_error("solved metric fails its own condition");
  if (!is_balanced(S, HermitianMetric::canonical(n)).holds())
    throw std::logic_error("balanced coefficients fail the balanced condition");
  return M;
}

StructureEquations XabcFamily::build() const { return build_xabc(A, B, C); }

StructureEquations build_xabc(const GaussianRational& A, const GaussianRational& B,
                                const GaussianRational& C) {
  const int n = 4;
  std::vector<Form> d_gen(4, Form::zero(n));
  Form dn(n);
  dn += wedge(Form::generator(n, 1, false), Form::generator(n, 2, false))
            .scaled(A);
  dn += wedge(Form::generator(n, 1, false), Form::generator(n, 3, false))
            .scaled(B);
  dn += wedge(Form::generator(n, 2, false), Form::generator(n, 3, false))
            .scaled(C);
  dn += pair_blade(n, 1);
  dn += pair_blade(n, 2);
  dn -= pair_blade(n, 3).scaled(GaussianRational(2));
  d_gen[3] = dn;
  return StructureEquations(n, std::move(d_gen));
}

Rational xabc_gamma(const GaussianRational& A, const GaussianRational& B,
                      const GaussianRational& C, const Rational& alpha, const Rational& beta) {
  Rational num = alpha * (C.norm() + 4) + beta * (B.norm() + 4);
  Rational den = 2 - A.norm();
  if (den == 0) throw std::domain_error("|A|^2 must stay below 2 for a solvable family");
  Rational g = num / den;
  return g;
}

HermitianMetric solve_astheno_xabc(const GaussianRational& A, const GaussianRational& B,
                                     const GaussianRational& C, const Rational& alpha,
                                     const Rational& beta) {
  if (!(A.norm() < 2))
    throw std::domain_error("|A|^2 must stay below 2 for a solvable family");
  if (!(alpha > 0) || !(beta > 0))
    throw std::domain_error("alpha and beta must be positive");

  StructureEquations S = build_xabc(A, B, C);
  ParamTablePtr table = ParamTableBuilder().real("g").freeze();
  std::vector<PolyScalar> diag{PolyScalar(GaussianRational(alpha)),
                               PolyScalar(GaussianRational(beta)),
                               PolyScalar::symbol(table, "g"),
                               PolyScalar(GaussianRational(1))};
  Form residual = S.del(
      S.delbar(power(HermitianMetric::diagonal(4, diag).fundamental_form(), 2)));
  GaussianRational g = solve_residual(residual, table, "g");

  if (!g.is_real() || !(g.re > 0)) throw std::logic_error("solved coefficient is not positive");
  HermitianMetric M = HermitianMetric::diagonal(
      4, {PolyScalar(GaussianRational(alpha)), PolyScalar(GaussianRational(beta)),
          PolyScalar(g), PolyScalar(GaussianRational(1))});
  if (!is_astheno_kahler(S, M).holds())
    throw std::logic_error("solved metric fails its own condition");
  return M;
}

Form skt_obstruction_heisenberg(const StructureEquations& S, const HermitianMetric& M) {
  return S.del(S.delbar(M.fundamental_form()));
}

ParamTablePtr generic_hermitian_table(int n, const std::vector<std::string>& extra_reals) {
  ParamTableBuilder tb;
  for (const std::string& name : extra_reals) tb.real(name);
  for (int j = 1; j <= n; ++j)
    tb.real("h" + std::to_string(j) + std::to_string(j));
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      tb.complex("h" + std::to_string(j) + std::to_string(k));
  return tb.freeze();
}

HermitianMetric generic_hermitian(int n, const ParamTablePtr& table) {
  std::map<std::pair<int, int>, PolyScalar> entries;
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k)
      entries[{j, k}] =
          PolyScalar::symbol(table, "h" + std::to_string(j) + std::to_string(k));
  return HermitianMetric::hermitian(n, entries);
}

}  // namespace nilforms
