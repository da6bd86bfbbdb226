#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albert/classify.hpp"
#include "albert/samples.hpp"

using namespace albert;
using O = Octonion<Rational>;
using J = JordanElement<Rational>;

TEST_CASE("the twelve worked examples") {
  {
    const OrbitClass c = classify(J::diag(rat(3), rat(2), rat(1)));
    CHECK(c.case_id == 1);
    const auto& p = std::get<ParamsDistinct>(c.params);
    CHECK(p.roots[0].rational() == 3);
    CHECK(p.roots[1].rational() == 2);
    CHECK(p.roots[2].rational() == 1);
    CHECK(p.h_index == 1);
  }
  CHECK(classify(J::diag(rat(2), rat(1), rat(3))).case_id == 2);
  CHECK(classify(J::diag(rat(1), rat(3), rat(2))).case_id == 3);
  {
    const OrbitClass c = classify(J::Fi1(2, O::one()));
    CHECK(c.case_id == 4);
    const auto& p = std::get<ParamsComplexPair>(c.params);
    CHECK(p.lambda1.rational() == 0);
    CHECK(p.p.rational() == 0);
    CHECK(p.q_squared.rational() == 1);
  }
  {
    const OrbitClass c = classify(J::Ei(0));
    CHECK(c.case_id == 5);
    const auto& p = std::get<ParamsDoubleRoot>(c.params);
    CHECK(p.lambda1 == 1);
    CHECK(p.lambda2 == 0);
  }
  CHECK(classify(J::Ei(2)).case_id == 6);
  {
    const OrbitClass c = classify(J::diag(rat(2), rat(2), rat(5)) + J::Pplus());
    CHECK(c.case_id == 7);
    const auto& p = std::get<ParamsDoubleRoot>(c.params);
    CHECK(p.lambda1 == 5);
    CHECK(p.lambda2 == 2);
  }
  CHECK(classify(J::diag(rat(1), rat(1), rat(-2)) + J::Pminus()).case_id == 8);
  CHECK(classify(rat(7) * J::unitE()).case_id == 9);
  CHECK(classify(J::Pplus()).case_id == 10);
  CHECK(classify(J::Pminus() + rat(1, 2) * J::unitE()).case_id == 11);
  {
    const OrbitClass c = classify(rat(2) * J::unitE() + J::Qplus(O::one()));
    CHECK(c.case_id == 12);
    CHECK(std::get<ParamsTripleRoot>(c.params).lambda == 2);
  }
}

TEST_CASE("canonical forms reproduce the table") {
  {
    OrbitClass c;
    c.case_id = 10;
    c.params = ParamsTripleRoot{rat(0)};
    const CanonicalForm cf = canonical_form(c);
    REQUIRE(cf.exact);
    CHECK(*cf.exact == J::Pplus());
  }
  {
    OrbitClass c;
    c.case_id = 4;
    c.params = ParamsComplexPair{AlgebraicReal(rat(0)), AlgebraicReal(rat(0)),
                                 AlgebraicReal(rat(1))};
    const CanonicalForm cf = canonical_form(c);
    REQUIRE(cf.exact);
    CHECK(*cf.exact == J::Fi1(2, O::one()));
  }
  {
    OrbitClass c;
    c.case_id = 9;
    c.params = ParamsTripleRoot{rat(1)};
    const CanonicalForm cf = canonical_form(c);
    REQUIRE(cf.exact);
    CHECK(*cf.exact == J::unitE());
  }
  {
    OrbitClass c;
    c.case_id = 2;
    c.params = ParamsDistinct{{AlgebraicReal(rat(3)), AlgebraicReal(rat(2)), AlgebraicReal(rat(1))}, 2};
    const CanonicalForm cf = canonical_form(c);
    REQUIRE(cf.exact);
    CHECK(*cf.exact == J::diag(rat(2), rat(1), rat(3)));
  }
}

TEST_CASE("classification is invariant under exact generators") {
  samples::Rng rng(101);
  const std::vector<J> corpus = {
      J::diag(rat(3), rat(2), rat(1)),
      J::diag(rat(-1), rat(4), rat(1, 2)),
      J::Fi1(2, rat(2) * O::one()),
      J::Ei(0),
      J::Ei(2) - rat(3) * J::unitE(),
      J::diag(rat(2), rat(2), rat(5)) + J::Pplus(),
      J::diag(rat(2), rat(2), rat(5)) + J::Pminus(),
      rat(4) * J::unitE(),
      J::Pplus() + rat(1) * J::unitE(),
      J::Pminus(),
      J::Qplus(O::one()) - rat(2, 3) * J::unitE()};
  for (const J& X : corpus) {
    const int want = classify(X).case_id;
    for (int n = 0; n < 6; ++n) {
      const F4Operator<Rational> g = rng.word(4);
      const J Y = g.apply(X);
      CHECK(classify(Y).case_id == want);
      // charpoly is exactly invariant
      CHECK(charpoly(Y) == charpoly(X));
    }
  }
}

TEST_CASE("idempotence on rational canonical forms") {
  samples::Rng rng(103);
  for (int n = 0; n < 40; ++n) {
    const J X = rng.jordan(3, 2);
    OrbitClass c;
    try {
      c = classify(X);
    } catch (const DomainError&) {
      continue;
    }
    const CanonicalForm cf = canonical_form(c);
    if (!cf.exact) continue;
    const OrbitClass c2 = classify(*cf.exact);
    CHECK(c2.case_id == c.case_id);
    CHECK(charpoly(*cf.exact) == charpoly(X));
  }
}

TEST_CASE("exactly one root projector lies in H(O)") {
  samples::Rng rng(107);
  int runs = 0;
  while (runs < 200) {
    const Rational a = rng.rational(8, 3), b = rng.rational(8, 3), c = rng.rational(8, 3);
    if (a == b || b == c || a == c) continue;
    ++runs;
    const J D = J::diag(a, b, c);
    const J X = rng.word(3).apply(D);
    const OrbitClass oc = classify(X);
    int geq = 0;
    for (const auto& g : oc.gaps)
      if (g.side == GapSide::GeqB) ++geq;
    CHECK(geq == 1);
    CHECK(oc.case_id >= 1);
    CHECK(oc.case_id <= 3);
  }
}

TEST_CASE("irrational distinct roots classify with bracketed root data") {
  // X = diag with charpoly l^3 - 4l + 1: three irrational real roots
  // (disc = 229 > 0); realized as a non-diagonal rational element
  const J X = J::Fi1(0, O::unit(1)) + J::Fi1(2, O::one()) + J::diag(rat(0), rat(0), rat(0)) +
              J::Fi1(1, O::unit(2));
  const CubicPoly<Rational> phi = charpoly(X);
  const RootStructure rs = root_structure(phi);
  if (const auto* t = std::get_if<ThreeDistinctReal>(&rs)) {
    const OrbitClass oc = classify(X);
    CHECK(oc.case_id >= 1);
    CHECK(oc.case_id <= 3);
    const auto& p = std::get<ParamsDistinct>(oc.params);
    CHECK(AlgebraicReal::compare(p.roots[0], p.roots[1]) > 0);
    CHECK(AlgebraicReal::compare(p.roots[1], p.roots[2]) > 0);
  } else {
    // if the sample happens to have a complex pair, it must be case 4
    CHECK(classify(X).case_id == 4);
  }
}
