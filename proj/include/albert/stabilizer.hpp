#pragma once

#include <string>
#include <vector>

#include "albert/classify.hpp"
#include "albert/f4group.hpp"

namespace albert {

// Element of Spin(7) x ImO x O with the twisted product
//   (g,p,x)(h,q,y) = (gh, p + g3 q + Im(x conj(g1 y)), x + g1 y).
// The ImO-restricted flavor carries a G2 part and imaginary x.
template <class S>
struct HeisenbergElement {
  TrialityTriple<S> g = TrialityTriple<S>::identity();
  Octonion<S> p{};  // imaginary
  Octonion<S> x{};
  bool imo_flavor = false;  // H_{ImO,ImO} with G2 part

  static HeisenbergElement identity(bool imo = false) {
    HeisenbergElement e;
    e.imo_flavor = imo;
    return e;
  }
};

template <class S>
void check_heisenberg(const HeisenbergElement<S>& a) {
  if (!a.g.is_triality() || !a.g.is_spin7()) throw NotSpin7();
  if (!oct_is_imaginary(a.p)) throw NotImaginary("Heisenberg p-part must be imaginary");
  if (a.imo_flavor) {
    if (!a.g.is_g2()) throw NotSpin7("ImO flavor requires a G2 part");
    if (!oct_is_imaginary(a.x)) throw NotImaginary("ImO flavor requires imaginary x");
  }
}

template <class S>
HeisenbergElement<S> h_mul(const HeisenbergElement<S>& a, const HeisenbergElement<S>& b) {
  if (a.imo_flavor != b.imo_flavor) throw FlavorMismatch();
  HeisenbergElement<S> r;
  r.imo_flavor = a.imo_flavor;
  r.g = a.g.compose(b.g);
  const Octonion<S> g1y = mat_apply_oct(a.g.g1, b.x);
  r.p = a.p + mat_apply_oct(a.g.g3, b.p) + oct_im(a.x * oct_conj(g1y));
  r.x = a.x + g1y;
  return r;
}

template <class S>
HeisenbergElement<S> h_inv(const HeisenbergElement<S>& a) {
  HeisenbergElement<S> r;
  r.imo_flavor = a.imo_flavor;
  r.g = a.g.inverse();
  r.p = -mat_apply_oct(r.g.g3, a.p);
  r.x = -mat_apply_oct(r.g.g1, a.x);
  return r;
}

// phi(g,p,x) = exp(G_2(p) + G_1(x)) phi0(g); lands in the P- stabilizer.
template <class S>
F4Operator<S> phi_hom(const HeisenbergElement<S>& a) {
  check_heisenberg(a);
  F4Operator<S> out = phi0(a.g);
  if (!oct_is_zero(a.x)) out = compose(exp_g(1, a.x), out);
  if (!oct_is_zero(a.p)) out = compose(exp_g(2, a.p), out);
  return out;
}

// Parabolic-type planes: nilpotent orbits of the base points.
enum class ParabolicKind { E3Pminus, Pminus, Qplus1 };

template <class S>
JordanElement<S> parabolic_plane(ParabolicKind kind, const Octonion<S>& param) {
  using J = JordanElement<S>;
  switch (kind) {
    case ParabolicKind::E3Pminus: {
      if (!oct_is_imaginary(param)) throw NotImaginary();
      // exp G_2(p) (-E1+E2) = (-E1+E2) - 2 F3^1(p) + 2(p|p) P-
      return (J::Ei(1) - J::Ei(0)) - S(2) * J::Fi1(2, param) +
             (S(2) * oct_norm(param)) * J::Pminus();
    }
    case ParabolicKind::Pminus:
      // exp G_1(x) E3 = E3 + Q+(x) + (x|x) P-
      return J::Ei(2) + J::Qplus(param) + oct_norm(param) * J::Pminus();
    case ParabolicKind::Qplus1:
      if (!oct_is_imaginary(param)) throw NotImaginary();
      return J::Ei(2) + J::Qplus(param) + oct_norm(param) * J::Pminus();
  }
  throw DomainError("parabolic_plane: bad kind");
}

struct StabilizerWitness {
  int case_id = 0;
  std::string group_type;
  std::vector<F4Operator<Rational>> generators;
  JordanElement<Rational> fixed_point;
};

namespace stab_detail {

inline Octonion<Rational> pyth(int i, int j) {
  // (3 e_i + 4 e_j)/5, a handy rational unit
  return rat(3, 5) * Octonion<Rational>::unit(i) + rat(4, 5) * Octonion<Rational>::unit(j);
}

// D4 sample: phi0 of L/R/T triples at rational units, plus the sigma_i.
inline std::vector<F4Operator<Rational>> d4_generators() {
  std::vector<F4Operator<Rational>> out;
  out.push_back(phi0(triality_triple_LRT(pyth(0, 2), 0)));
  out.push_back(phi0(triality_triple_LRT(pyth(1, 5), 1)));
  out.push_back(phi0(triality_triple_LRT(pyth(3, 7), 2)));
  out.push_back(phi0(triality_triple_LRT(Octonion<Rational>::unit(4), 0)));
  out.push_back(sigma_op<Rational>(0));
  out.push_back(sigma_op<Rational>(1));
  out.push_back(sigma_op<Rational>(2));
  return out;
}

inline std::vector<F4Operator<Rational>> spin7_generators() {
  std::vector<F4Operator<Rational>> out;
  out.push_back(phi0(spin7_pair(Octonion<Rational>::unit(3), Octonion<Rational>::unit(2))));
  out.push_back(phi0(spin7_pair(pyth(1, 4), Octonion<Rational>::unit(6))));
  out.push_back(phi0(spin7_pair(Octonion<Rational>::unit(5), pyth(2, 7))));
  return out;
}

inline std::vector<F4Operator<Rational>> g2_generators() {
  std::vector<F4Operator<Rational>> out;
  // rational G2 frames
  {
    const Octonion<Rational> f1 = pyth(1, 2);
    const Octonion<Rational> f2 =
        rat(-4, 5) * Octonion<Rational>::unit(1) + rat(3, 5) * Octonion<Rational>::unit(2);
    out.push_back(phi0(g2_from_frame(f1, f2, Octonion<Rational>::unit(4))));
  }
  {
    const Octonion<Rational> f1 = pyth(2, 5);
    const Octonion<Rational> f2 =
        rat(-4, 5) * Octonion<Rational>::unit(2) + rat(3, 5) * Octonion<Rational>::unit(5);
    out.push_back(phi0(g2_from_frame(f1, f2, Octonion<Rational>::unit(1))));
  }
  return out;
}

inline F4Operator<Rational> conj_by_sigma1(const F4Operator<Rational>& g) {
  return compose(sigma_op<Rational>(0), compose(g, sigma_op<Rational>(0)));
}

}  // namespace stab_detail

// Finite generator samples of the per-case stabilizer groups; every emitted
// generator fixes the case's canonical form exactly.
inline StabilizerWitness stabilizer_witness(const OrbitClass& oc) {
  using O = Octonion<Rational>;
  namespace sd = stab_detail;
  StabilizerWitness w;
  w.case_id = oc.case_id;
  const CanonicalForm cf = canonical_form(oc);
  if (!cf.exact)
    throw DomainError("stabilizer_witness requires rational canonical parameters");
  w.fixed_point = *cf.exact;

  switch (oc.case_id) {
    case 1:
    case 2:
    case 3: {
      w.group_type = "Spin(8)";
      w.generators = sd::d4_generators();
      break;
    }
    case 4: {
      w.group_type = "Spin^0(7,1)";
      // stabilizer of F_3^1(1) (and hence E_3): Spin(7) triples and boosts
      // with imaginary unit axis
      w.generators = sd::spin7_generators();
      w.generators.push_back(exp_boost<Rational>(2, O::unit(1), rat(5, 4), rat(3, 4)));
      w.generators.push_back(exp_boost<Rational>(2, sd::pyth(2, 6), rat(13, 12), rat(5, 12)));
      w.generators.push_back(sigma_op<Rational>(2));
      break;
    }
    case 5: {
      w.group_type = "Spin(9)";
      w.generators = sd::d4_generators();
      w.generators.push_back(exp_rot<Rational>(O::one(), rat(3, 5), rat(4, 5)));
      w.generators.push_back(exp_rot<Rational>(sd::pyth(1, 3), rat(5, 13), rat(12, 13)));
      break;
    }
    case 6: {
      w.group_type = "Spin^0(8,1)";
      w.generators = sd::d4_generators();
      w.generators.push_back(exp_boost<Rational>(2, O::one(), rat(5, 4), rat(3, 4)));
      w.generators.push_back(exp_boost<Rational>(2, sd::pyth(0, 4), rat(13, 12), rat(5, 12)));
      break;
    }
    case 7:
    case 8: {
      w.group_type = "Spin(7) |x ImO";
      // phi_1(g,p) = exp(G_2(p)) phi0(g) fixes E3 and P-
      std::vector<F4Operator<Rational>> gens = sd::spin7_generators();
      gens.push_back(exp_g<Rational>(2, O::unit(1)));
      gens.push_back(exp_g<Rational>(2, sd::pyth(3, 5)));
      {
        HeisenbergElement<Rational> h;
        h.g = spin7_pair(O::unit(3), O::unit(2));
        h.p = rat(2) * O::unit(4);
        gens.push_back(phi_hom(h));
      }
      if (oc.case_id == 7) {
        w.generators.reserve(gens.size());
        for (const auto& g : gens) w.generators.push_back(sd::conj_by_sigma1(g));
      } else {
        w.generators = std::move(gens);
      }
      break;
    }
    case 9: {
      w.group_type = "F4(-20)";
      w.generators = sd::d4_generators();
      w.generators.push_back(exp_rot<Rational>(O::one(), rat(3, 5), rat(4, 5)));
      w.generators.push_back(exp_boost<Rational>(1, O::one(), rat(5, 4), rat(3, 4)));
      w.generators.push_back(exp_boost<Rational>(2, O::one(), rat(5, 4), rat(3, 4)));
      w.generators.push_back(exp_g<Rational>(1, O::unit(2) + rat(2) * O::one()));
      w.generators.push_back(exp_g<Rational>(2, O::unit(5)));
      w.generators.push_back(exp_g<Rational>(-1, O::unit(6)));
      w.generators.push_back(exp_g<Rational>(-2, O::unit(7)));
      break;
    }
    case 10:
    case 11: {
      w.group_type = "Spin(7) |x H_{ImO,O}";
      std::vector<F4Operator<Rational>> gens = sd::spin7_generators();
      gens.push_back(exp_g<Rational>(2, O::unit(1)));
      gens.push_back(exp_g<Rational>(1, rat(1, 2) * O::one() + O::unit(4)));
      {
        HeisenbergElement<Rational> h;
        h.g = spin7_pair(O::unit(5), O::unit(1));
        h.p = O::unit(3);
        h.x = O::unit(2) - rat(3) * O::one();
        gens.push_back(phi_hom(h));
      }
      if (oc.case_id == 10) {
        for (const auto& g : gens) w.generators.push_back(sd::conj_by_sigma1(g));
      } else {
        w.generators = std::move(gens);
      }
      break;
    }
    case 12: {
      w.group_type = "G2 |x H_{ImO,ImO}";
      w.generators = sd::g2_generators();
      w.generators.push_back(exp_g<Rational>(2, O::unit(1)));
      w.generators.push_back(exp_g<Rational>(1, O::unit(2)));
      {
        HeisenbergElement<Rational> h;
        h.imo_flavor = true;
        h.g = std::get<AtomPhi0<Rational>>(sd::g2_generators()[0].word[0]).t;
        h.p = rat(2) * O::unit(6);
        h.x = O::unit(3) + O::unit(7);
        w.generators.push_back(phi_hom(h));
      }
      break;
    }
    default:
      throw DomainError("stabilizer_witness: bad case id");
  }
  for (auto& g : w.generators) {
    if (!(g.apply(w.fixed_point) == w.fixed_point))
      throw InconsistentPaper("witness generator does not fix the canonical form");
  }
  return w;
}

// alpha_{1,2}(t) = exp(t (A~_1^1(-1) + A~_2^1(1))) = exp(G_1(-t)).
template <class S>
F4Operator<S> alpha12(const S& t) {
  return exp_g(1, (-t) * Octonion<S>::one());
}

}  // namespace albert
