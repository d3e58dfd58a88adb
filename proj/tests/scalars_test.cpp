#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "nilforms/dsl.hpp"
#include "nilforms/scalars.hpp"
#include "test_support.hpp"

using namespace nilforms;
using testsupport::Rng;

namespace {

ParamTablePtr abc_table() {
  return ParamTableBuilder().real("a1").real("a2").real("a3").freeze();
}

ParamTablePtr mixed_table() {
  return ParamTableBuilder().complex("A").complex("B").real("x").real("y").freeze();
}

PolyScalar sym(const ParamTablePtr& t, const std::string& name) {
  return PolyScalar::symbol(t, name);
}

PolyScalar rand_poly(Rng& rng, const ParamTablePtr& t, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> expo(0, 2);
  PolyScalar p;
  int terms = nterms(rng);
  for (int i = 0; i < terms; ++i) {
    PolyScalar mono(testsupport::rand_gaussian(rng, true));
    for (std::size_t s = 0; s < t->size(); ++s) {
      unsigned e = expo(rng);
      for (unsigned j = 0; j < e; ++j) mono *= sym(t, t->symbol(s).name);
    }
    p += mono;
  }
  return p;
}

Assignment rand_assignment(Rng& rng, const ParamTablePtr& t) {
  Assignment a(t);
  for (std::size_t s = 0; s < t->size(); ++s) {
    const ParamSymbol& ps = t->symbol(s);
    if (!ps.primary) continue;
    if (ps.real)
      a.set(ps.name, GaussianRational(testsupport::rand_rational(rng)));
    else
      a.set(ps.name, testsupport::rand_gaussian(rng));
  }
  return a;
}

}  // namespace

TEST_CASE("rational construction canonicalizes") {
  CHECK(make_rational(2, 6) == make_rational(1, 3));
  CHECK(make_rational(-2, -6) == make_rational(1, 3));
  CHECK(make_rational(2, -6) == make_rational(-1, 3));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("gaussian arithmetic on units and mixed values") {
  GaussianRational one(1), i = GaussianRational::unit_i();
  CHECK((one + i) * (one - i) == GaussianRational(2));
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.pow(4) == one);
  GaussianRational z = GaussianRational::make(2, 1, -3, 1);  // 2 - 3i
  CHECK(z.conj() == GaussianRational::make(2, 1, 3, 1));
  CHECK(z * z.conj() == GaussianRational(13));
  CHECK(z.norm() == Rational(13));
  CHECK(z / z == one);
  CHECK_THROWS_AS(z / GaussianRational(), std::domain_error);
}

TEST_CASE("gaussian literals print canonically and re-parse") {
  CHECK(GaussianRational().str() == "0");
  CHECK(GaussianRational(3).str() == "3");
  CHECK(GaussianRational(Rational(-1) / 2).str() == "-1/2");
  CHECK(GaussianRational::unit_i().str() == "i");
  CHECK((-GaussianRational::unit_i()).str() == "-i");
  CHECK(GaussianRational::make(0, 1, 3, 1).str() == "3i");
  CHECK(GaussianRational::make(2, 1, -3, 1).str() == "(2-3i)");
  CHECK(GaussianRational::make(1, 2, 3, 1).str() == "(1/2+3i)");

  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    GaussianRational z = testsupport::rand_gaussian(rng);
    CHECK(parse_gaussian(z.str()) == z);
  }
}

TEST_CASE("param tables pair complex symbols with conjugates") {
  ParamTablePtr t = mixed_table();
  CHECK(t->size() == 6);  // A cA B cB x y
  auto ia = t->find("A"), ica = t->find("cA");
  REQUIRE(ia.has_value());
  REQUIRE(ica.has_value());
  CHECK(t->symbol(*ia).partner == *ica);
  CHECK(t->symbol(*ica).partner == *ia);
  CHECK_FALSE(t->symbol(*ica).primary);
  auto ix = t->find("x");
  REQUIRE(ix.has_value());
  CHECK(t->symbol(*ix).real);
  CHECK(t->symbol(*ix).partner == *ix);
  CHECK_THROWS_AS(ParamTableBuilder().real("a").real("a").freeze(), std::domain_error);
}

TEST_CASE("polynomial ring axioms hold on random elements") {
  ParamTablePtr t = mixed_table();
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    PolyScalar p = rand_poly(rng, t), q = rand_poly(rng, t), r = rand_poly(rng, t);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == PolyScalar());
    CHECK(p * PolyScalar() == PolyScalar());
    CHECK(p * PolyScalar(1L) == p);
  }
}

TEST_CASE("conjugation is an involutive ring map exchanging partners") {
  ParamTablePtr t = mixed_table();
  PolyScalar A = sym(t, "A"), cA = sym(t, "cA"), x = sym(t, "x");
  CHECK(A.conj() == cA);
  CHECK((A * cA).conj() == A * cA);
  PolyScalar threei_x = GaussianRational::make(0, 1, 3, 1) * x;
  CHECK(threei_x.conj() == GaussianRational::make(0, 1, -3, 1) * x);

  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    PolyScalar p = rand_poly(rng, t), q = rand_poly(rng, t);
    CHECK(p.conj().conj() == p);
    CHECK((p + q).conj() == p.conj() + q.conj());
    CHECK((p * q).conj() == p.conj() * q.conj());
  }
}

TEST_CASE("is_real detects conjugation-invariant polynomials") {
  ParamTablePtr t = mixed_table();
  PolyScalar A = sym(t, "A"), cA = sym(t, "cA"), x = sym(t, "x");
  CHECK((A * cA).is_real());
  CHECK(x.is_real());
  CHECK((A * cA + GaussianRational(2) * x).is_real());
  CHECK_FALSE(A.is_real());
  CHECK_FALSE((GaussianRational::unit_i() * x).is_real());
}

TEST_CASE("substitution is a ring homomorphism consistent with conjugation") {
  ParamTablePtr t = mixed_table();
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    PolyScalar p = rand_poly(rng, t), q = rand_poly(rng, t);
    Assignment a = rand_assignment(rng, t);
    CHECK((p + q).substitute(a) == p.substitute(a) + q.substitute(a));
    CHECK((p * q).substitute(a) == p.substitute(a) * q.substitute(a));
    CHECK(p.conj().substitute(a) == p.substitute(a).conj());
  }
}

TEST_CASE("substitution puts numbers in for symbols") {
  ParamTablePtr t = abc_table();
  PolyScalar s = sym(t, "a1") + sym(t, "a2") + sym(t, "a3");
  Assignment a(t);
  a.set("a1", GaussianRational(1));
  a.set("a2", GaussianRational(1));
  a.set("a3", GaussianRational(-2));
  CHECK(s.substitute(a) == GaussianRational());

  ParamTablePtr tc = mixed_table();
  PolyScalar norm = sym(tc, "A") * sym(tc, "cA");
  Assignment ac(tc);
  ac.set("A", GaussianRational::make(1, 1, 1, 1));
  CHECK(norm.substitute(ac) == GaussianRational(2));
  CHECK(ac.value(*tc->find("cA")) == GaussianRational::make(1, 1, -1, 1));
}

TEST_CASE("assignments reject wrong-kind values and report gaps") {
  ParamTablePtr t = mixed_table();
  Assignment a(t);
  CHECK_THROWS_AS(a.set("x", GaussianRational::unit_i()), std::domain_error);
  CHECK_THROWS_AS(a.set("nosuch", GaussianRational(1)), std::domain_error);
  PolyScalar p = sym(t, "y");
  CHECK_THROWS_AS(p.substitute(a), std::domain_error);
}

TEST_CASE("linear_parts splits degree-one polynomials and rejects higher degree") {
  ParamTablePtr t = abc_table();
  PolyScalar a1 = sym(t, "a1"), a2 = sym(t, "a2");
  std::size_t ia1 = *t->find("a1");
  PolyScalar p = GaussianRational(2) * a1 * a2 + a2 + PolyScalar(5L);
  auto [hi, lo] = p.linear_parts(ia1);
  CHECK(hi == GaussianRational(2) * a2);
  CHECK(lo == a2 + PolyScalar(5L));
  CHECK(p.degree_in(ia1) == 1);
  PolyScalar quad = a1 * a1;
  CHECK_THROWS_AS(quad.linear_parts(ia1), std::domain_error);
}

TEST_CASE("solve_linear returns the unique root as an exact ratio") {
  // 2 b4 - 2 (a1 + a2 + a3) = 0 has root a1 + a2 + a3
  ParamTablePtr t = ParamTableBuilder().real("a1").real("a2").real("a3").real("b4").freeze();
  PolyScalar sum = sym(t, "a1") + sym(t, "a2") + sym(t, "a3");
  PolyScalar p = GaussianRational(2) * sym(t, "b4") - GaussianRational(2) * sum;
  RatScalar root = solve_linear(p, "b4");
  CHECK(root == RatScalar(sum, PolyScalar(1L)));

  CHECK_THROWS_AS(solve_linear(sym(t, "a1") * sym(t, "a1"), "a1"), std::domain_error);
  CHECK_THROWS_AS(solve_linear(sym(t, "a1") - sym(t, "a1"), "a1"), std::domain_error);
  CHECK_THROWS_AS(solve_linear(sym(t, "a1"), "nosuch"), std::domain_error);
}

TEST_CASE("solve_linear roots vanish after cross multiplication") {
  Rng rng(19);
  ParamTablePtr tx =
      ParamTableBuilder().complex("A").complex("B").real("x").real("y").real("g").freeze();
  std::size_t ig = *tx->find("g");
  for (int trial = 0; trial < 40; ++trial) {
    PolyScalar hi = rand_poly(rng, tx), lo = rand_poly(rng, tx);
    // keep hi, lo free of g and hi nonzero
    if (hi.degree_in(ig) > 0 || lo.degree_in(ig) > 0 || hi.is_zero()) continue;
    PolyScalar p = hi * PolyScalar::symbol(tx, "g") + lo;
    RatScalar root = solve_linear(p, "g");
    CHECK(hi * root.num() + lo * root.den() == PolyScalar());
  }
}

TEST_CASE("ratio scalars compare by cross multiplication") {
  ParamTablePtr t = abc_table();
  PolyScalar a1 = sym(t, "a1"), a2 = sym(t, "a2");
  RatScalar two_halves(GaussianRational(2) * a1, GaussianRational(2) * a2);
  RatScalar plain(a1, a2);
  CHECK(two_halves == plain);
  CHECK(RatScalar(GaussianRational(1)) != RatScalar(GaussianRational(2)));
  CHECK_THROWS_AS(RatScalar(a1, PolyScalar()), std::domain_error);

  RatScalar frac(a1 * a1 - a2 * a2, a1 - a2);
  CHECK(frac == RatScalar(a1 + a2, PolyScalar(1L)));  // no reduction needed for equality

  Assignment a(t);
  a.set("a1", GaussianRational(3));
  a.set("a2", GaussianRational(3));
  a.set("a3", GaussianRational(0));
  CHECK_THROWS_AS(frac.substitute(a), std::domain_error);  // denominator vanishes
  a = Assignment(t);
  a.set("a1", GaussianRational(3));
  a.set("a2", GaussianRational(1));
  a.set("a3", GaussianRational(0));
  CHECK(frac.substitute(a) == GaussianRational(4));
}

TEST_CASE("gamma formula solves as a ratio of polynomials") {
  // g (2 - A cA) - x (C cC + 4) - y (B cB + 4), solved for g
  ParamTablePtr t = ParamTableBuilder()
                        .complex("A")
                        .complex("B")
                        .complex("C")
                        .real("x")
                        .real("y")
                        .real("g")
                        .freeze();
  PolyScalar A = sym(t, "A"), cA = sym(t, "cA"), B = sym(t, "B"), cB = sym(t, "cB");
  PolyScalar C = sym(t, "C"), cC = sym(t, "cC"), x = sym(t, "x"), y = sym(t, "y");
  PolyScalar four(4L);
  PolyScalar p = sym(t, "g") * (PolyScalar(2L) - A * cA) - x * (C * cC + four) - y * (B * cB + four);
  RatScalar root = solve_linear(p, "g");
  CHECK(root == RatScalar(x * (C * cC + four) + y * (B * cB + four), PolyScalar(2L) - A * cA));
}

TEST_CASE("normalized collapses proportional polynomials") {
  ParamTablePtr t = abc_table();
  PolyScalar p = GaussianRational(2) * sym(t, "a1") + GaussianRational(4) * sym(t, "a2");
  PolyScalar q = GaussianRational(Rational(-1) / 2) * sym(t, "a1") - sym(t, "a2");
  CHECK(p.normalized() == q.normalized());
  CHECK(PolyScalar().normalized() == PolyScalar());
}

TEST_CASE("polynomial printing uses canonical literal forms") {
  ParamTablePtr t = abc_table();
  PolyScalar p = GaussianRational(2) * sym(t, "a1");
  CHECK(p.str() == "2*a1");
  PolyScalar zero;
  CHECK(zero.str() == "0");
  CHECK(PolyScalar(GaussianRational::make(2, 1, -3, 1)).str() == "(2-3i)");
}
