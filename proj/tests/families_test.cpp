#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "nilforms/families.hpp"
#include "test_support.hpp"

using namespace nilforms;
using testsupport::Rng;

namespace {

std::vector<PolyScalar> consts(std::vector<long> v) {
  std::vector<PolyScalar> out;
  for (long x : v) out.push_back(PolyScalar(GaussianRational(x)));
  return out;
}

GaussianRational gr(long num, long den = 1) { return GaussianRational(make_rational(num, den)); }

}  // namespace

TEST_CASE("heisenberg builder shapes and validates the equations") {
  StructureEquations S = build_heisenberg(4, consts({1, 1, -2}));
  CHECK(S.n() == 4);
  CHECK(S.validated());
  CHECK(S.is_abelian());
  for (int j = 1; j <= 3; ++j) CHECK(S.d_generator(j).is_zero());
  CHECK_FALSE(S.d_generator(4).is_zero());

  CHECK_THROWS_AS(build_heisenberg(2, consts({1})), std::invalid_argument);
  CHECK_THROWS_AS(build_heisenberg(4, consts({1, 1})), std::invalid_argument);
}

TEST_CASE("nonzero hypothesis flags vanishing coefficients") {
  HeisenbergFamily all_set{4, consts({1, 2, 3})};
  CHECK(all_set.nonzero_hypothesis());
  HeisenbergFamily has_zero{4, consts({1, 0, 3})};
  CHECK_FALSE(has_zero.nonzero_hypothesis());
  CHECK(has_zero.build().validated());  // still a fine structure

  ParamTablePtr t = ParamTableBuilder().real("a1").freeze();
  HeisenbergFamily symbolic{3, {PolyScalar::symbol(t, "a1"), PolyScalar(2L)}};
  CHECK(symbolic.nonzero_hypothesis());  // unknown is not known-zero
}

TEST_CASE("balanced constraint and tail solving") {
  ParamTablePtr t = ParamTableBuilder().real("a1").real("a2").freeze();
  PolyScalar a1 = PolyScalar::symbol(t, "a1"), a2 = PolyScalar::symbol(t, "a2");
  CHECK(balanced_constraint({a1, a2}) == a1 + a2);
  CHECK(solve_balanced_tail({gr(1), gr(1)}) == gr(-2));
  CHECK(solve_balanced_tail({gr(1), gr(2), gr(3)}) == gr(-6));
  CHECK(solve_balanced_tail({}) == gr(0));
}

TEST_CASE("diagonal astheno solver reproduces the closed formula") {
  // pinned instance: n = 4, a = (1, 1, -2) gives b = (1, 1, 4, 1)
  HermitianMetric M = solve_astheno_diagonal(4, {Rational(1), Rational(1), Rational(-2)});
  CHECK(M.entry(1, 1) == PolyScalar(1L));
  CHECK(M.entry(2, 2) == PolyScalar(1L));
  CHECK(M.entry(3, 3) == PolyScalar(4L));
  CHECK(M.entry(4, 4) == PolyScalar(1L));
  CHECK(M.positive_definite());

  // n = 5, a = (1,1,1,-3): b4 = 2(1+1+1)/(5-3) = 3
  HermitianMetric M5 =
      solve_astheno_diagonal(5, {Rational(1), Rational(1), Rational(1), Rational(-3)});
  CHECK(M5.entry(4, 4) == PolyScalar(3L));

  Rng rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + int(rng() % 5);
    std::vector<Rational> a;
    Rational sum(0);
    std::uniform_int_distribution<long> num(1, 9), den(1, 9);
    for (int j = 0; j < n - 2; ++j) {
      Rational v = make_rational(num(rng), den(rng));
      a.push_back(v);
      sum += v;
    }
    a.push_back(Rational(-sum));
    HermitianMetric solved = solve_astheno_diagonal(n, a);
    // closed formula the solver must land on: b = 2 (a1+...+a_{n-2}) / (n-3)
    Rational expect = Rational(2) * sum / Rational(n - 3);
    CHECK(solved.entry(n - 1, n - 1) == PolyScalar(GaussianRational(expect)));
    // and the result is genuinely astheno-kahler and positive
    StructureEquations S = build_heisenberg(n, [&] {
      std::vector<PolyScalar> ap;
      for (const Rational& v : a) ap.push_back(PolyScalar(GaussianRational(v)));
      return ap;
    }());
    CHECK(is_astheno_kahler(S, solved).holds());
    CHECK(solved.positive_definite());
  }
}

TEST_CASE("diagonal astheno solver rejects bad inputs") {
  CHECK_THROWS_AS(solve_astheno_diagonal(3, {Rational(1), Rational(-1)}), std::domain_error);
  // unbalanced
  CHECK_THROWS_AS(solve_astheno_diagonal(4, {Rational(1), Rational(1), Rational(1)}),
                  std::domain_error);
  // nonpositive head
  CHECK_THROWS_AS(solve_astheno_diagonal(4, {Rational(-1), Rational(3), Rational(-2)}),
                  std::domain_error);
  CHECK_THROWS_AS(solve_astheno_diagonal(4, {Rational(0), Rational(2), Rational(-2)}),
                  std::domain_error);
  CHECK_THROWS_AS(solve_astheno_diagonal(4, {Rational(1), Rational(1)}), std::invalid_argument);
}

TEST_CASE("quadratic-term family builds and matches the plain one at zero") {
  StructureEquations X = build_xabc(GaussianRational(), GaussianRational(), GaussianRational());
  CHECK(X.validated());
  CHECK(X.is_abelian());
  StructureEquations H = build_heisenberg(4, consts({1, 1, -2}));
  for (int j = 1; j <= 4; ++j) CHECK(X.d_generator(j) == H.d_generator(j));

  StructureEquations Y = build_xabc(GaussianRational(1), GaussianRational(), GaussianRational());
  CHECK(Y.validated());
  CHECK_FALSE(Y.is_abelian());
  Form d4 = Y.d_generator(4);
  CHECK(bidegree_component(d4, 2, 0) ==
        wedge(Form::generator(4, 1, false), Form::generator(4, 2, false)));
}

TEST_CASE("xabc gamma formula and solver agree") {
  // pinned: A = B = C = 0, alpha = beta = 1 gives gamma 4
  CHECK(xabc_gamma(GaussianRational(), GaussianRational(), GaussianRational(), Rational(1),
                     Rational(1)) == Rational(4));
  // A = 1: gamma = (4 + 4) / (2 - 1) = 8
  CHECK(xabc_gamma(GaussianRational(1), GaussianRational(), GaussianRational(), Rational(1),
                     Rational(1)) == Rational(8));

  HermitianMetric M = solve_astheno_xabc(GaussianRational(), GaussianRational(),
                                           GaussianRational(), Rational(1), Rational(1));
  CHECK(M.entry(3, 3) == PolyScalar(4L));

  HermitianMetric M8 = solve_astheno_xabc(GaussianRational(1), GaussianRational(),
                                            GaussianRational(), Rational(1), Rational(1));
  CHECK(M8.entry(3, 3) == PolyScalar(8L));

  Rng rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    GaussianRational A = testsupport::rand_gaussian(rng);
    while (!(A.norm() < 2)) A = testsupport::rand_gaussian(rng);
    GaussianRational B = testsupport::rand_gaussian(rng), C = testsupport::rand_gaussian(rng);
    std::uniform_int_distribution<long> pos(1, 9);
    Rational alpha = make_rational(pos(rng), pos(rng)), beta = make_rational(pos(rng), pos(rng));
    HermitianMetric solved = solve_astheno_xabc(A, B, C, alpha, beta);
    Rational g = xabc_gamma(A, B, C, alpha, beta);
    CHECK(solved.entry(3, 3) == PolyScalar(GaussianRational(g)));
    CHECK(solved.positive_definite());
    CHECK(is_astheno_kahler(build_xabc(A, B, C), solved).holds());
  }
}

TEST_CASE("xabc solver guards the norm bound and positivity") {
  GaussianRational onepi = GaussianRational::make(1, 1, 1, 1);  // |1+i|^2 = 2
  CHECK_THROWS_AS(solve_astheno_xabc(onepi, GaussianRational(), GaussianRational(), Rational(1),
                                       Rational(1)),
                  std::domain_error);
  CHECK_THROWS_AS(xabc_gamma(onepi, GaussianRational(), GaussianRational(), Rational(1),
                               Rational(1)),
                  std::domain_error);
  CHECK_THROWS_AS(solve_astheno_xabc(GaussianRational(2), GaussianRational(), GaussianRational(),
                                       Rational(1), Rational(1)),
                  std::domain_error);
  CHECK_THROWS_AS(solve_astheno_xabc(GaussianRational(), GaussianRational(), GaussianRational(),
                                       Rational(0), Rational(1)),
                  std::domain_error);
  CHECK_THROWS_AS(solve_astheno_xabc(GaussianRational(), GaussianRational(), GaussianRational(),
                                       Rational(1), Rational(-2)),
                  std::domain_error);
}

TEST_CASE("skt obstruction is minus half i h_nn times the coefficient square") {
  // fully symbolic: structure coefficients and metric both parametric
  int n = 4;
  ParamTablePtr t = generic_hermitian_table(n, {"a1", "a2", "a3"});
  std::vector<PolyScalar> a = {PolyScalar::symbol(t, "a1"), PolyScalar::symbol(t, "a2"),
                               PolyScalar::symbol(t, "a3")};
  StructureEquations S = build_heisenberg(n, a);
  HermitianMetric M = generic_hermitian(n, t);

  Form obstruction = skt_obstruction_heisenberg(S, M);
  Form A = S.d_generator(n);
  Form expect = wedge(A, A).scaled(GaussianRational(Rational(0), make_rational(-1, 2)) *
                                   PolyScalar::symbol(t, "h44"));
  CHECK(obstruction == expect);
  CHECK(obstruction == S.del(S.delbar(M.fundamental_form())));
  CHECK_FALSE(obstruction.is_zero());

  // numeric spot check: with two nonzero coefficients the obstruction survives
  StructureEquations N = build_heisenberg(4, consts({1, 1, -2}));
  HermitianMetric id = HermitianMetric::canonical(4);
  Form ob = skt_obstruction_heisenberg(N, id);
  CHECK(ob == is_skt(N, id).residual);
  CHECK_FALSE(ob.is_zero());

  // a single surviving coefficient kills A^A and the obstruction
  StructureEquations One = build_heisenberg(4, consts({5, 0, 0}));
  CHECK(skt_obstruction_heisenberg(One, id).is_zero());
  CHECK(is_skt(One, id).holds());
}

TEST_CASE("generic hermitian tables declare the full symbol set") {
  ParamTablePtr t = generic_hermitian_table(3, {"s"});
  CHECK(t->find("h11").has_value());
  CHECK(t->find("h33").has_value());
  CHECK(t->find("h12").has_value());
  CHECK(t->find("ch12").has_value());
  CHECK(t->find("s").has_value());
  CHECK_FALSE(t->find("h21").has_value());  // only j <= k entries exist

  HermitianMetric M = generic_hermitian(3, t);
  CHECK(M.entry(1, 2) == PolyScalar::symbol(t, "h12"));
  CHECK(M.entry(2, 1) == PolyScalar::symbol(t, "ch12"));
  CHECK(M.entry(2, 2) == PolyScalar::symbol(t, "h22"));
  Form F = M.fundamental_form();
  CHECK(conjugate_form(F) == F);
}
