#include "albert/selftest.hpp"

#include <functional>
#include <map>

#include "albert/classify.hpp"
#include "albert/samples.hpp"
#include "albert/stabilizer.hpp"
#include "albert/transport.hpp"

namespace albert::selftest {
namespace {

using O = Octonion<Rational>;
using J = JordanElement<Rational>;

struct Checker {
  long checks = 0;
  long failures = 0;
  void expect(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
};

void suite_octonion(samples::Rng& rng, Checker& c) {
  for (int n = 0; n < 200; ++n) {
    const O x = rng.octonion(), y = rng.octonion(), z = rng.octonion();
    const O a = rng.octonion(), b = rng.octonion();
    c.expect(oct_inner(x * y, x * y) == oct_inner(x, x) * oct_inner(y, y));
    c.expect(oct_inner(a * x, a * y) == oct_inner(a, a) * oct_inner(x, y));   
    c.expect(oct_inner(a * x, b * y) + oct_inner(b * x, a * y) ==
             2 * oct_inner(a, b) * oct_inner(x, y));                         
    c.expect(oct_inner(a * x, y) == oct_inner(x, oct_conj(a) * y));      
    c.expect(oct_conj(x * y) == oct_conj(y) * oct_conj(x));                
    c.expect(x * oct_conj(x) == O::scalar(oct_inner(x, x)));            
    c.expect(a * (oct_conj(a) * x) == (a * oct_conj(a)) * x);            
    c.expect((a * x) * (y * a) == a * ((x * y) * a));                                // Moufang
    c.expect(oct_re(x * y) == oct_re(y * x));                          
    c.expect(oct_re(x * (y * z)) == oct_re(y * (z * x)));
    c.expect(oct_T(x, x, z) == O::zero() && oct_T(x, z, x) == O::zero());            // alternating
    c.expect(oct_T(x, y, z) + oct_T(x, z, y) == O::zero());
  }
}

void suite_jordan(samples::Rng& rng, Checker& c) {
  const J E = J::unitE();
  for (int n = 0; n < 120; ++n) {
    const J X = rng.jordan(), Y = rng.jordan(), Z = rng.jordan();
    // trace of a cross product
    c.expect(trace(cross(X, Y)) == (trace(X) * trace(Y) - inner(X, Y)) / 2);
    // X x E = (tr X E - X)/2
    c.expect(cross(X, E) == rat(1, 2) * (trace(X) * E - X));
    // sharp(sharp X) = det X * X
    c.expect(sharp(sharp(X)) == det(X) * X);
    // charpoly middle coefficient
    c.expect(trace(sharp(X)) == (trace(X) * trace(X) - inner(X, X)) / 2);
    // trilinear symmetry
    c.expect(trilinear(X, Y, Z) == trilinear(Y, Z, X) && trilinear(X, Y, Z) == trilinear(X, Z, Y));
    // jmul consistency with the cross-product definition
    c.expect(cross(X, Y) ==
             rat(1, 2) * (rat(2) * jmul(X, Y) - trace(X) * Y - trace(Y) * X +
                          (trace(X) * trace(Y) - inner(X, Y)) * E));
    // projector decomposition at a generic rational lambda
    const Rational lam = rng.rational() + 20;  // avoid characteristic roots
    try {
      const J Ee = e_lambda(X, lam);
      const J W = w_lambda(X, lam);
      c.expect(trace(Ee) == 1);
      c.expect(lam * Ee + ((trace(X) - lam) / 2) * (E - Ee) + W == X);
    } catch (const DegenerateLambda&) {
      c.expect(true);
    }
  }
  // membership disjointness sweep
  for (int n = 0; n < 150; ++n) {
    const J X = rng.jordan(3, 3);
    int hits = 0;
    if (jis_zero(X)) ++hits;
    const J s = sharp(X);
    if (jis_zero(s) && trace(X) == 1) ++hits;
    if (jis_zero(s) && trace(X) == 0 && !jis_zero(X)) ++hits;
    if (!jis_zero(s) && trace(X) == 0 && trace(s) == 0 && det(X) == 0) ++hits;
    c.expect(hits <= 1);
    c.expect((membership(X) == MembershipClass::None) == (hits == 0));
  }
}

void suite_realroots(samples::Rng& rng, Checker& c) {
  for (int n = 0; n < 150; ++n) {
    const Rational a = rng.rational(6, 3), b = rng.rational(6, 3), d = rng.rational(6, 3);
    const CubicPoly<Rational> phi{a + b + d, a * b + b * d + d * a, a * b * d};
    const RootStructure rs = root_structure(phi);
    std::vector<Rational> sorted{a, b, d};
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] != sorted[1] && sorted[1] != sorted[2]) {
      const auto* t = std::get_if<ThreeDistinctReal>(&rs);
      c.expect(t != nullptr);
      if (t)
        c.expect(t->roots[0].is_rational() && t->roots[0].rational() == sorted[2] &&
                 t->roots[1].rational() == sorted[1] && t->roots[2].rational() == sorted[0]);
    } else if (sorted[0] == sorted[1] && sorted[1] == sorted[2]) {
      const auto* t = std::get_if<TripleRoot>(&rs);
      c.expect(t != nullptr && t->lambda == sorted[0]);
    } else {
      const auto* t = std::get_if<DoubleSimple>(&rs);
      c.expect(t != nullptr);
      if (t) {
        const Rational dup = sorted[0] == sorted[1] ? sorted[0] : sorted[2];
        const Rational single = sorted[0] == sorted[1] ? sorted[2] : sorted[0];
        c.expect(t->lambda2 == dup && t->lambda1 == single);
      }
    }
  }
  // complex-pair cases: (x - r)(x^2 - 2p x + p^2 + q^2)
  for (int n = 0; n < 60; ++n) {
    const Rational r = rng.rational(5, 2), p = rng.rational(5, 2);
    const Rational q = rng.nonzero_rational(5, 2);
    const CubicPoly<Rational> phi{r + 2 * p, 2 * p * r + p * p + q * q, r * (p * p + q * q)};
    const RootStructure rs = root_structure(phi);
    const auto* t = std::get_if<RealPlusComplexPair>(&rs);
    c.expect(t != nullptr);
    if (t) {
      c.expect(t->lambda1.is_rational() && t->lambda1.rational() == r);
      c.expect(t->p.is_rational() && t->p.rational() == p);
      c.expect(t->q_squared.is_rational() && t->q_squared.rational() == q * q);
    }
  }
}

void suite_group(samples::Rng& rng, Checker& c) {
  for (int n = 0; n < 10; ++n) {
    F4Operator<Rational> g = rng.generator();
    c.expect(verify_automorphism(g).ok);
  }
  // triality cyclicity and the Spin(7) criterion
  for (int n = 0; n < 10; ++n) {
    const TrialityTriple<Rational> t = triality_triple_LRT(rng.unit(), 0);
    c.expect(t.is_triality());
    c.expect(t.rotate_to_slot(1).is_triality() && t.rotate_to_slot(2).is_triality());
    const TrialityTriple<Rational> s = spin7_pair(rng.unit(true), rng.unit(true));
    c.expect(s.is_triality() && s.is_spin7());
    c.expect((s.g2 - conj_by_eps(s.g1)).is_zero());
  }
  // restricted-root weights and the n+ bracket law
  const LieElement<Rational> A31 = lie_A<Rational>(2, O::one());
  for (int n = 0; n < 15; ++n) {
    const O x = rng.octonion(3, 3), y = rng.octonion(3, 3);
    const O p = rng.imaginary(3, 3);
    c.expect(bracket(A31, lie_G<Rational>(1, x)).m == lie_G<Rational>(1, x).m);
    c.expect(bracket(A31, lie_G<Rational>(2, p)).m == (rat(2) * lie_G<Rational>(2, p)).m);
    c.expect(bracket(lie_G<Rational>(1, x), lie_G<Rational>(1, y)).m ==
             lie_G<Rational>(2, rat(2) * oct_im(x * oct_conj(y))).m);
  }
}

void suite_classify(samples::Rng& rng, Checker& c) {
  const std::vector<std::pair<int, J>> corpus = {
      {1, J::diag(rat(3), rat(2), rat(1))},
      {2, J::diag(rat(2), rat(1), rat(3))},
      {3, J::diag(rat(1), rat(3), rat(2))},
      {4, J::Fi1(2, O::one())},
      {5, J::Ei(0)},
      {6, J::Ei(2)},
      {7, J::diag(rat(2), rat(2), rat(5)) + J::Pplus()},
      {8, J::diag(rat(-1), rat(-1), rat(4)) + J::Pminus()},
      {9, rat(2) * J::unitE()},
      {10, J::Pplus()},
      {11, rat(-1, 3) * J::unitE() + J::Pminus()},
      {12, J::Qplus(O::one())}};
  for (const auto& [want, X] : corpus) {
    c.expect(classify(X).case_id == want);
    for (int n = 0; n < 4; ++n) {
      const F4Operator<Rational> g = rng.word(3);
      c.expect(classify(g.apply(X)).case_id == want);
    }
  }
}

void suite_stabilizer(samples::Rng& rng, Checker& c) {
  auto random_h = [&rng](bool imo) {
    HeisenbergElement<Rational> h;
    h.imo_flavor = imo;
    h.g = imo ? g2_mapping_to_e1(O::unit(static_cast<int>(rng.range(1, 7))))
              : spin7_pair(rng.unit(true), rng.unit(true));
    h.p = rng.imaginary(3, 3);
    h.x = imo ? rng.imaginary(3, 3) : rng.octonion(3, 3);
    return h;
  };
  for (int n = 0; n < 25; ++n) {
    const bool imo = rng.range(0, 1) == 1;
    const auto a = random_h(imo), b = random_h(imo), d = random_h(imo);
    c.expect(h_mul(h_mul(a, b), d).x == h_mul(a, h_mul(b, d)).x);
    c.expect(h_mul(h_mul(a, b), d).p == h_mul(a, h_mul(b, d)).p);
    const auto e = h_mul(a, h_inv(a));
    c.expect(oct_is_zero(e.p) && oct_is_zero(e.x) && (e.g.g1 - Mat<Rational>::identity(8)).is_zero());
    // phi is a homomorphism into the P- stabilizer
    c.expect(phi_hom(h_mul(a, b)).m == compose(phi_hom(a), phi_hom(b)).m);
    c.expect(phi_hom(a).apply(J::Pminus()) == J::Pminus());
    // conjugation law for phi0 against the nilpotent part
    const F4Operator<Rational> f0 = phi0(a.g);
    const F4Operator<Rational> lhs =
        compose(f0, compose(compose(exp_g<Rational>(2, b.p), exp_g<Rational>(1, b.x)), inverse(f0)));
    const F4Operator<Rational> rhs = compose(exp_g<Rational>(2, mat_apply_oct(a.g.g3, b.p)),
                                             exp_g<Rational>(1, mat_apply_oct(a.g.g1, b.x)));
    c.expect(lhs.m == rhs.m);
  }
  for (int n = 0; n < 30; ++n) {
    const Rational t = rng.rational();
    const Rational r = rng.rational();
    const O x = rng.octonion(4, 4);
    const J X0 = r * J::Pminus() + J::Qplus(x);
    c.expect(alpha12(t).apply(X0) == (r - 2 * t * oct_re(x)) * J::Pminus() + J::Qplus(x));
  }
}

using SuiteFn = std::function<void(samples::Rng&, Checker&)>;
const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> m = {
      {"octonion", suite_octonion}, {"jordan", suite_jordan},
      {"realroots", suite_realroots}, {"group", suite_group},
      {"classify", suite_classify}, {"stabilizer", suite_stabilizer}};
  return m;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : suites()) names.push_back(k);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw DomainError("unknown selftest suite: " + name);
  samples::Rng rng(seed ^ std::hash<std::string>{}(name));
  Checker c;
  it->second(rng, c);
  return SuiteResult{name, c.checks, c.failures};
}

std::vector<SuiteResult> run_all(std::uint64_t seed, const std::string& filter) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suites()) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    out.push_back(run_suite(name, seed));
  }
  return out;
}

}  // namespace albert::selftest
