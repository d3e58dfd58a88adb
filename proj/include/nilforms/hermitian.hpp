#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilforms/structure.hpp"

namespace nilforms {

// Hermitian coefficient matrix h_{jk}; the stored matrix always satisfies
// h_{kj} = conj(h_{jk}) and real diagonal entries, both enforced on build.
class HermitianMetric {
 public:
  static HermitianMetric canonical(int n);
  static HermitianMetric diagonal(int n, std::vector<PolyScalar> entries);
  // entries keyed by (j,k) with 1 <= j <= k <= n; the lower triangle is
  // derived by conjugation, missing entries are zero
  static HermitianMetric hermitian(int n,
                                   const std::map<std::pair<int, int>, PolyScalar>& entries);

  int n() const { return n_; }
  bool is_diagonal() const { return diagonal_; }
  bool is_canonical() const { return canonical_; }
  const PolyScalar& entry(int j, int k) const;  // 1-based

  // F = (i/2) * sum h_{jk} wj^cwk; always a real (1,1)-form
  Form fundamental_form() const;

  // leading principal minors of the numeric matrix are all positive;
  // parameters are evaluated through the assignment first
  bool positive_definite_at(const Assignment& a) const;
  bool positive_definite() const;  // entries must already be constant

 private:
  HermitianMetric(int n) : n_(n), h_(size_t(n), std::vector<PolyScalar>(size_t(n))) {}

  int n_;
  bool diagonal_ = false;
  bool canonical_ = false;
  std::vector<std::vector<PolyScalar>> h_;
};

enum class ConditionStatus { Holds, Fails, Conditional };

// Outcome of one metric condition: the residual form whose vanishing is the
// condition, plus the normalized coefficient constraints when parameters
// keep the answer open.
struct ConditionReport {
  std::string condition;
  std::optional<int> k;
  ConditionStatus status = ConditionStatus::Holds;
  Form residual;
  std::vector<PolyScalar> constraints;

  bool holds() const { return status == ConditionStatus::Holds; }
  static ConditionReport classify(std::string name, std::optional<int> k, Form residual);
};

ConditionReport is_balanced(const StructureEquations& S, const HermitianMetric& M);
ConditionReport is_skt(const StructureEquations& S, const HermitianMetric& M);
ConditionReport is_astheno_kahler(const StructureEquations& S, const HermitianMetric& M);
ConditionReport is_k_gauduchon(const StructureEquations& S, const HermitianMetric& M, int k);

// C_{F,k}: the ratio (i/2) del delbar F^k ^ F^{n-k-1} : F^n of volume
// coefficients; throws on k out of range or a degenerate metric
RatScalar gauduchon_constant(const StructureEquations& S, const HermitianMetric& M, int k);

// del F^k = k del F ^ F^{k-1}, and the same for delbar
bool verify_power_rule(const StructureEquations& S, const HermitianMetric& M, unsigned k);
// (n-2) del delbar F^k ^ F^{n-k-1}
//   = k(n-k-1) del delbar F ^ F^{n-2} + (k-1) d(delbar F^k ^ F^{n-k-1})
bool verify_degree_identity(const StructureEquations& S, const HermitianMetric& M, int k);
// (n-2) C_{F,k} = k(n-k-1) C_{F,1} for all k, and C_{F,n-1} = 0
bool verify_constant_relation(const StructureEquations& S, const HermitianMetric& M);
// the k-th and (n-k-1)-th conditions decide together
bool verify_duality(const StructureEquations& S, const HermitianMetric& M, int k);

}  // namespace nilforms
