#pragma once

#include <vector>

#include "nilforms/hermitian.hpp"

namespace nilforms {

// Heisenberg-type equations: d wj = 0 for j < n and
// d wn = a1 w1^cw1 + ... + a_{n-1} w_{n-1}^cw_{n-1}.
struct HeisenbergFamily {
  int n = 0;
  std::vector<PolyScalar> a;

  // the family's standing hypothesis: no coefficient is (known to be) zero
  bool nonzero_hypothesis() const;
  StructureEquations build() const;
};

StructureEquations build_heisenberg(int n, const std::vector<PolyScalar>& a);

// sum of the coefficients; its vanishing makes the canonical metric balanced
PolyScalar balanced_constraint(const std::vector<PolyScalar>& a);
// last coefficient closing a numeric head to a balanced vector
GaussianRational solve_balanced_tail(const std::vector<GaussianRational>& head);

// diagonal metric (a1, ..., a_{n-2}, b, 1) whose b is derived by solving the
// engine's own residual; requires n >= 4, positive head, balanced total
HermitianMetric solve_astheno_diagonal(int n, const std::vector<Rational>& a);

// the n = 4 equations d w4 = A w1^w2 + B w1^w3 + C w2^w3
//                           + w1^cw1 + w2^cw2 - 2 w3^cw3
struct XabcFamily {
  GaussianRational A, B, C;
  StructureEquations build() const;
};

StructureEquations build_xabc(const GaussianRational& A, const GaussianRational& B,
                                const GaussianRational& C);

// diag(alpha, beta, gamma, 1) with gamma again derived by the residual solver;
// requires |A|^2 < 2 and positive alpha, beta
HermitianMetric solve_astheno_xabc(const GaussianRational& A, const GaussianRational& B,
                                     const GaussianRational& C, const Rational& alpha,
                                     const Rational& beta);

// the direct formula the solver must reproduce:
// gamma = (alpha (|C|^2 + 4) + beta (|B|^2 + 4)) / (2 - |A|^2)
Rational xabc_gamma(const GaussianRational& A, const GaussianRational& B,
                      const GaussianRational& C, const Rational& alpha, const Rational& beta);

// del delbar F for an arbitrary metric over a Heisenberg-type structure;
// contractually equal to -(i/2) h_nn A ^ A with A = sum a_j wj^cwj
Form skt_obstruction_heisenberg(const StructureEquations& S, const HermitianMetric& M);

// declares h11..hnn (real) and hJK (complex, j < k) plus any extra real
// parameters, for building fully symbolic metrics
ParamTablePtr generic_hermitian_table(int n, const std::vector<std::string>& extra_reals = {});
// reads the h-parameters back out of such a table
HermitianMetric generic_hermitian(int n, const ParamTablePtr& table);

}  // namespace nilforms
