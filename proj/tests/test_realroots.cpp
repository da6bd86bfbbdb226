#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "albert/realroots.hpp"
#include "albert/samples.hpp"

using namespace albert;

TEST_CASE("root_structure recognizes the basic patterns") {
  {
    const auto rs = root_structure(CubicPoly<Rational>{rat(6), rat(11), rat(6)});
    const auto* t = std::get_if<ThreeDistinctReal>(&rs);
    REQUIRE(t);
    CHECK(t->roots[0].rational() == 3);
    CHECK(t->roots[1].rational() == 2);
    CHECK(t->roots[2].rational() == 1);
  }
  {
    const auto rs = root_structure(CubicPoly<Rational>{rat(0), rat(1), rat(0)});  // l^3 + l
    const auto* t = std::get_if<RealPlusComplexPair>(&rs);
    REQUIRE(t);
    CHECK(t->lambda1.rational() == 0);
    CHECK(t->p.rational() == 0);
    CHECK(t->q_squared.rational() == 1);
  }
  {
    // (l-5)(l-2)^2 = l^3 - 9 l^2 + 24 l - 20
    const auto rs = root_structure(CubicPoly<Rational>{rat(9), rat(24), rat(20)});
    const auto* t = std::get_if<DoubleSimple>(&rs);
    REQUIRE(t);
    CHECK(t->lambda1 == 5);
    CHECK(t->lambda2 == 2);
  }
  {
    const auto rs = root_structure(CubicPoly<Rational>{rat(6), rat(12), rat(8)});  // (l-2)^3
    const auto* t = std::get_if<TripleRoot>(&rs);
    REQUIRE(t);
    CHECK(t->lambda == 2);
  }
}

TEST_CASE("irrational roots come back as isolating brackets") {
  // l^3 - 2: single real root 2^(1/3)
  const auto rs = root_structure(CubicPoly<Rational>{rat(0), rat(0), rat(2)});
  const auto* t = std::get_if<RealPlusComplexPair>(&rs);
  REQUIRE(t);
  CHECK(!t->lambda1.is_rational());
  CHECK(t->lambda1.lo() >= 1);
  CHECK(t->lambda1.hi() <= 2);
  CHECK(std::abs(t->lambda1.approx() - std::cbrt(2.0)) < 1e-12);
  // derived p and q^2 track the exact functions of lambda1
  const double l = std::cbrt(2.0);
  CHECK(std::abs(t->p.approx() - (0 - l) / 2) < 1e-9);
  CHECK(std::abs(t->q_squared.approx() - (3 * l * l) / 4) < 1e-9);
}

TEST_CASE("refine halves the bracket and keeps containment") {
  AlgebraicReal r(CubicPoly<Rational>{rat(0), rat(0), rat(2)}, rat(1), rat(2));
  const Rational w0 = r.hi() - r.lo();
  r.refine();
  CHECK(r.hi() - r.lo() == w0 / 2);
  r.refine();
  CHECK(r.lo() == rat(5, 4));
  CHECK(r.hi() == rat(3, 2));
  AlgebraicReal q(rat(7, 3));
  q.refine();
  CHECK(q.is_rational());
  CHECK(q.rational() == rat(7, 3));
  // 30 refinements shrink the width below 2^-30
  AlgebraicReal s(CubicPoly<Rational>{rat(0), rat(0), rat(2)}, rat(1), rat(2));
  for (int i = 0; i < 30; ++i) s.refine();
  CHECK(s.hi() - s.lo() <= Rational(1) / Rational(BigInt(1) << 30));
}

TEST_CASE("decide_gap basic cases") {
  const Poly id{rat(0), rat(1)};  // lambda
  const Poly one{rat(1)};
  CHECK(decide_gap(id, one, AlgebraicReal(rat(2)), rat(0), rat(1)) == GapSide::GeqB);
  CHECK(decide_gap(id, one, AlgebraicReal(rat(-3)), rat(0), rat(1)) == GapSide::LeqA);
  // boundary values decide deterministically
  CHECK(decide_gap(id, one, AlgebraicReal(rat(1)), rat(0), rat(1)) == GapSide::GeqB);
  CHECK(decide_gap(id, one, AlgebraicReal(rat(0)), rat(0), rat(1)) == GapSide::LeqA);
  // irrational root of l^3 = 2 lies above the gap (0,1)
  AlgebraicReal r(CubicPoly<Rational>{rat(0), rat(0), rat(2)}, rat(1), rat(2));
  CHECK(decide_gap(id, one, r, rat(0), rat(1)) == GapSide::GeqB);
  // violated precondition surfaces as an error
  CHECK_THROWS_AS((void)decide_gap(id, one, AlgebraicReal(rat(1, 2)), rat(0), rat(1)),
                  NoGapViolated);
}

TEST_CASE("random factored cubics recover the pattern and gcd degree") {
  samples::Rng rng(31);
  for (int n = 0; n < 300; ++n) {
    const Rational a = rng.rational(8, 4), b = rng.rational(8, 4), c = rng.rational(8, 4);
    const CubicPoly<Rational> phi{a + b + c, a * b + b * c + c * a, a * b * c};
    const Poly p{-phi.d, phi.s, -phi.t, rat(1)};
    const int gd = poly_deg(poly_gcd(p, poly_deriv(p)));
    const bool all_eq = (a == b && b == c);
    const bool some_eq = (a == b || b == c || a == c);
    if (all_eq) {
      CHECK(gd == 2);
      CHECK(std::holds_alternative<TripleRoot>(root_structure(phi)));
    } else if (some_eq) {
      CHECK(gd == 1);
      CHECK(std::holds_alternative<DoubleSimple>(root_structure(phi)));
    } else {
      CHECK(gd == 0);
      CHECK(std::holds_alternative<ThreeDistinctReal>(root_structure(phi)));
    }
  }
}

TEST_CASE("decide_gap agrees with direct evaluation at rational roots") {
  samples::Rng rng(37);
  for (int n = 0; n < 200; ++n) {
    const Rational root = rng.rational(9, 3);
    // random num/den with den(root) != 0
    Poly num{rng.rational(), rng.rational(), rng.rational()};
    Poly den{rng.rational(), rng.rational()};
    if (poly_eval(den, root) == 0) continue;
    const Rational v = poly_eval(num, root) / poly_eval(den, root);
    const Rational aa = v + 1, bb = v + 2;  // value below the gap
    CHECK(decide_gap(num, den, AlgebraicReal(root), aa, bb) == GapSide::LeqA);
    const Rational a2 = v - 2, b2 = v - 1;  // value above the gap
    CHECK(decide_gap(num, den, AlgebraicReal(root), a2, b2) == GapSide::GeqB);
  }
}
