#include "nilforms/hermitian.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilforms {

HermitianMetric HermitianMetric::canonical(int n) {
  std::vector<PolyScalar> ones(size_t(n), PolyScalar(GaussianRational(1)));
  HermitianMetric m = diagonal(n, std::move(ones));
  m.canonical_ = true;
  return m;
}

HermitianMetric HermitianMetric::diagonal(int n, std::vector<PolyScalar> entries) {
  if (n < 1) throw std::invalid_argument("metric dimension must be positive");
  if (int(entries.size()) != n)
    throw std::invalid_argument("diagonal metric needs one entry per generator");
  HermitianMetric m(n);
  for (int j = 0; j < n; ++j) {
    if (!entries[j].is_real())
      throw std::domain_error("diagonal metric entry " + std::to_string(j + 1) + " is not real");
    m.h_[j][j] = std::move(entries[j]);
  }
  m.diagonal_ = true;
  return m;
}

HermitianMetric HermitianMetric::hermitian(
    int n, const std::map<std::pair<int, int>, PolyScalar>& entries) {
  if (n < 1) throw std::invalid_argument("metric dimension must be positive");
  HermitianMetric m(n);
  bool off_diag = false;
  for (const auto& [jk, value] : entries) {
    auto [j, k] = jk;
    if (j < 1 || k < 1 || j > n || k > n)
      throw std::invalid_argument("metric entry index out of range");
    if (j > k) throw std::invalid_argument("metric entries must have j <= k");
    if (j == k) {
      if (!value.is_real())
        throw std::domain_error("diagonal metric entry " + std::to_string(j) + " is not real");
      m.h_[j - 1][j - 1] = value;
    } else {
      m.h_[j - 1][k - 1] = value;
      m.h_[k - 1][j - 1] = value.conj();
      if (!value.is_zero()) off_diag = true;
    }
  }
  m.diagonal_ = !off_diag;
  return m;
}

const PolyScalar& HermitianMetric::entry(int j, int k) const {
  if (j < 1 || k < 1 || j > n_ || k > n_)
    throw std::domain_error("metric entry index out of range");
  return h_[j - 1][k - 1];
}

Form HermitianMetric::fundamental_form() const {
  GaussianRational half_i(Rational(0), make_rational(1, 2));
  Form f(n_);
  for (int j = 1; j <= n_; ++j) {
    for (int k = 1; k <= n_; ++k) {
      const PolyScalar& h = h_[j - 1][k - 1];
      if (h.is_zero()) continue;
      Form blade = wedge(Form::generator(n_, j, false), Form::generator(n_, k, true));
      f += blade.scaled(half_i * h);
    }
  }
  return f;
}

namespace {

GaussianRational minor_determinant(const std::vector<std::vector<GaussianRational>>& m, int k) {
  // fraction-free would be overkill: Q(i) is a field, plain elimination works
  std::vector<std::vector<GaussianRational>> a;
  a.resize(size_t(k));
  for (int r = 0; r < k; ++r) a[r].assign(m[r].begin(), m[r].begin() + k);
  GaussianRational det(1);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return GaussianRational();
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < k; ++r) {
      if (a[r][col].is_zero()) continue;
      GaussianRational factor = a[r][col] / a[col][col];
      for (int c = col; c < k; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

}  // namespace

bool HermitianMetric::positive_definite_at(const Assignment& a) const {
  std::vector<std::vector<GaussianRational>> num;
  num.resize(size_t(n_));
  for (auto& row : num) row.resize(size_t(n_));
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) num[j][k] = h_[j][k].substitute(a);
  for (int k = 1; k <= n_; ++k) {
    GaussianRational det = minor_determinant(num, k);
    if (!det.is_real() || !(det.re > 0)) return false;
  }
  return true;
}

bool HermitianMetric::positive_definite() const {
  return positive_definite_at(Assignment(nullptr));
}

ConditionReport ConditionReport::classify(std::string name, std::optional<int> k,
                                          Form residual) {
  ConditionReport r;
  r.condition = std::move(name);
  r.k = k;
  r.residual = std::move(residual);
  if (r.residual.is_zero()) {
    r.status = ConditionStatus::Holds;
    return r;
  }
  bool constant_obstruction = false;
  for (const auto& [b, c] : r.residual.terms()) {
    (void)b;
    if (c.is_constant()) {
      constant_obstruction = true;
      continue;
    }
    PolyScalar norm = c.normalized();
    if (std::find(r.constraints.begin(), r.constraints.end(), norm) == r.constraints.end())
      r.constraints.push_back(norm);
  }
  r.status = constant_obstruction ? ConditionStatus::Fails : ConditionStatus::Conditional;
  return r;
}

ConditionReport is_balanced(const StructureEquations& S, const HermitianMetric& M) {
  Form f = M.fundamental_form();
  return ConditionReport::classify("balanced", std::nullopt,
                                   S.d(power(f, unsigned(S.n() - 1))));
}

ConditionReport is_skt(const StructureEquations& S, const HermitianMetric& M) {
  if (S.n() < 3) throw std::domain_error("condition needs dimension at least 3");
  Form f = M.fundamental_form();
  return ConditionReport::classify("skt", std::nullopt, S.del(S.delbar(f)));
}

ConditionReport is_astheno_kahler(const StructureEquations& S, const HermitianMetric& M) {
  if (S.n() < 3) throw std::domain_error("condition needs dimension at least 3");
  Form f = M.fundamental_form();
  return ConditionReport::classify("astheno", std::nullopt,
                                   S.del(S.delbar(power(f, unsigned(S.n() - 2)))));
}

ConditionReport is_k_gauduchon(const StructureEquations& S, const HermitianMetric& M, int k) {
  if (k < 1 || k > S.n() - 1) throw std::domain_error("k out of range");
  Form f = M.fundamental_form();
  Form residual = wedge(S.del(S.delbar(power(f, unsigned(k)))), power(f, unsigned(S.n() - 1 - k)));
  return ConditionReport::classify("kgauduchon", k, std::move(residual));
}

RatScalar gauduchon_constant(const StructureEquations& S, const HermitianMetric& M, int k) {
  if (k < 1 || k > S.n() - 1) throw std::domain_error("k out of range");
  Form f = M.fundamental_form();
  Form num_form = wedge(S.del(S.delbar(power(f, unsigned(k)))),
                        power(f, unsigned(S.n() - 1 - k)));
  GaussianRational half_i(Rational(0), make_rational(1, 2));
  PolyScalar num = half_i * top_coefficient(num_form);
  PolyScalar den = top_coefficient(power(f, unsigned(S.n())));
  if (den.is_zero()) throw std::domain_error("degenerate metric: volume form vanishes");
  return RatScalar(std::move(num), std::move(den));
}

bool verify_power_rule(const StructureEquations& S, const HermitianMetric& M, unsigned k) {
  if (k < 1) throw std::domain_error("k out of range");
  Form f = M.fundamental_form();
  Form fk1 = power(f, k - 1);
  PolyScalar kc{GaussianRational(long(k))};
  bool del_ok = S.del(power(f, k)) == wedge(S.del(f), fk1).scaled(kc);
  bool delbar_ok = S.delbar(power(f, k)) == wedge(S.delbar(f), fk1).scaled(kc);
  return del_ok && delbar_ok;
}

bool verify_degree_identity(const StructureEquations& S, const HermitianMetric& M, int k) {
  int n = S.n();
  if (k < 1 || k > n - 1) throw std::domain_error("k out of range");
  Form f = M.fundamental_form();
  Form ddb_fk = S.del(S.delbar(power(f, unsigned(k))));
  Form lhs = wedge(ddb_fk, power(f, unsigned(n - 1 - k))).scaled(GaussianRational(n - 2));
  Form skt_part = wedge(S.del(S.delbar(f)), power(f, unsigned(n - 2)))
                      .scaled(GaussianRational(long(k) * (n - 1 - k)));
  Form exact_part =
      S.d(wedge(S.delbar(power(f, unsigned(k))), power(f, unsigned(n - 1 - k))))
          .scaled(GaussianRational(k - 1));
  return lhs == skt_part + exact_part;
}

bool verify_constant_relation(const StructureEquations& S, const HermitianMetric& M) {
  int n = S.n();
  RatScalar c1 = gauduchon_constant(S, M, 1);
  for (int k = 1; k <= n - 2; ++k) {
    RatScalar ck = gauduchon_constant(S, M, k);
    RatScalar lhs = RatScalar(GaussianRational(n - 2)) * ck;
    RatScalar rhs = RatScalar(GaussianRational(long(k) * (n - 1 - k))) * c1;
    if (!(lhs == rhs)) return false;
  }
  return gauduchon_constant(S, M, n - 1).is_zero();
}

bool verify_duality(const StructureEquations& S, const HermitianMetric& M, int k) {
  int n = S.n();
  if (k < 1 || k > n / 2 - 1) throw std::domain_error("k out of range");
  return is_k_gauduchon(S, M, k).holds() == is_k_gauduchon(S, M, n - 1 - k).holds();
}

}  // namespace nilforms
