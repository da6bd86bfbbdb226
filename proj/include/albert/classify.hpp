#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "albert/jordan.hpp"
#include "albert/realroots.hpp"

namespace albert {

struct ParamsDistinct {
  std::array<AlgebraicReal, 3> roots;  // descending
  int h_index;                         // 1..3: which root's projector lies in H(O)
};
struct ParamsComplexPair {
  AlgebraicReal lambda1, p, q_squared;
};
struct ParamsDoubleRoot {
  Rational lambda1;  // simple
  Rational lambda2;  // double
};
struct ParamsTripleRoot {
  Rational lambda;
};

struct GapCertificate {
  int root_index = 0;  // 1..3
  GapSide side = GapSide::LeqA;
};

struct OrbitClass {
  int case_id = 0;  // 1..12
  std::variant<ParamsDistinct, ParamsComplexPair, ParamsDoubleRoot, ParamsTripleRoot> params;
  // certificates backing the decision
  std::vector<GapCertificate> gaps;
  std::optional<MembershipClass> e_class;  // cases 5-8: class of E_{X,lambda1}
  std::optional<MembershipClass> w_class;  // cases 7-8: class of W_{X,lambda1}
  std::optional<MembershipClass> p_class;  // cases 9-12: class of p(X)
};

// ((lambda E - X)^{x2} | E1) as a polynomial in lambda:
//   lambda^2 - (tr X - (X|E1)) lambda + (X^{x2}|E1)
inline Poly e1_numerator_poly(const JordanElement<Rational>& X) {
  const Rational trX = trace(X);
  const Rational xe1 = inner(X, JordanElement<Rational>::Ei(0));
  const Rational se1 = inner(sharp(X), JordanElement<Rational>::Ei(0));
  return Poly{se1, -(trX - xe1), Rational(1)};
}
inline Poly charpoly_deriv_poly(const CubicPoly<Rational>& c) {
  return Poly{c.s, -2 * c.t, Rational(3)};
}

// The twelve-case orbit decision tree.
inline OrbitClass classify(const JordanElement<Rational>& X) {
  OrbitClass out;
  const CubicPoly<Rational> phi = charpoly(X);
  RootStructure rs = root_structure(phi);

  if (auto* d3 = std::get_if<ThreeDistinctReal>(&rs)) {
    const Poly num = e1_numerator_poly(X);
    const Poly den = charpoly_deriv_poly(phi);
    int h_index = 0;
    for (int i = 0; i < 3; ++i) {
      const GapSide side =
          decide_gap(num, den, d3->roots[static_cast<std::size_t>(i)], Rational(0), Rational(1));
      out.gaps.push_back(GapCertificate{i + 1, side});
      if (side == GapSide::GeqB) {
        if (h_index != 0)
          throw InconsistentPaper("two projectors in H(O) for distinct real roots");
        h_index = i + 1;
      }
    }
    if (h_index == 0) throw InconsistentPaper("no projector in H(O) for distinct real roots");
    out.case_id = h_index;
    out.params = ParamsDistinct{d3->roots, h_index};
    return out;
  }
  if (auto* cp = std::get_if<RealPlusComplexPair>(&rs)) {
    out.case_id = 4;
    out.params = ParamsComplexPair{cp->lambda1, cp->p, cp->q_squared};
    return out;
  }
  if (auto* ds = std::get_if<DoubleSimple>(&rs)) {
    const JordanElement<Rational> Ee = e_lambda(X, ds->lambda1);
    const JordanElement<Rational> W = w_lambda(X, ds->lambda1);
    const MembershipClass ec = membership(Ee);
    out.e_class = ec;
    out.params = ParamsDoubleRoot{ds->lambda1, ds->lambda2};
    if (ec == MembershipClass::H_O) {
      if (!jis_zero(W))
        throw InconsistentPaper("E in H(O) but W nonzero for a double root");
      out.case_id = 5;
      return out;
    }
    if (ec != MembershipClass::Hprime_O)
      throw InconsistentPaper("E_{X,lambda1} in neither hyperbolic plane");
    if (jis_zero(W)) {
      out.case_id = 6;
      return out;
    }
    const MembershipClass wc = membership(W);
    out.w_class = wc;
    if (wc == MembershipClass::N1plus) {
      out.case_id = 7;
      return out;
    }
    if (wc == MembershipClass::N1minus) {
      out.case_id = 8;
      return out;
    }
    throw InconsistentPaper("W_{X,lambda1} not in {0} u N1+- for a double root");
  }
  const auto& tr3 = std::get<TripleRoot>(rs);
  const JordanElement<Rational> Z = p_traceless(X);
  const MembershipClass pc = membership(Z);
  out.p_class = pc;
  out.params = ParamsTripleRoot{tr3.lambda};
  switch (pc) {
    case MembershipClass::Zero: out.case_id = 9; return out;
    case MembershipClass::N1plus: out.case_id = 10; return out;
    case MembershipClass::N1minus: out.case_id = 11; return out;
    case MembershipClass::N2: out.case_id = 12; return out;
    default: throw InconsistentPaper("p(X) not in {0} u N1+- u N2 for a triple root");
  }
}

struct CanonicalForm {
  int case_id = 0;
  std::optional<JordanElement<Rational>> exact;  // present when all parameters are rational
  JordanElement<double> approx;                  // decimal rendering, always available
};

inline CanonicalForm canonical_form(const OrbitClass& c) {
  CanonicalForm out;
  out.case_id = c.case_id;
  using Jq = JordanElement<Rational>;
  using Jd = JordanElement<double>;
  auto exact_diag = [&](const Rational& a, const Rational& b, const Rational& cc) {
    out.exact = Jq::diag(a, b, cc);
  };
  switch (c.case_id) {
    case 1:
    case 2:
    case 3: {
      const auto& p = std::get<ParamsDistinct>(c.params);
      const int i = c.case_id - 1;
      const AlgebraicReal& r0 = p.roots[static_cast<std::size_t>(i)];
      const AlgebraicReal& r1 = p.roots[static_cast<std::size_t>((i + 1) % 3)];
      const AlgebraicReal& r2 = p.roots[static_cast<std::size_t>((i + 2) % 3)];
      out.approx = Jd::diag(r0.approx(), r1.approx(), r2.approx());
      if (r0.is_rational() && r1.is_rational() && r2.is_rational())
        exact_diag(r0.rational(), r1.rational(), r2.rational());
      break;
    }
    case 4: {
      const auto& p = std::get<ParamsComplexPair>(c.params);
      const double q = std::sqrt(p.q_squared.approx());
      out.approx = Jd::diag(p.p.approx(), p.p.approx(), p.lambda1.approx()) +
                   Jd::Fi1(2, q * Octonion<double>::one());
      if (p.lambda1.is_rational() && p.p.is_rational() && p.q_squared.is_rational()) {
        if (auto qr = scalar_ops<Rational>::try_sqrt(p.q_squared.rational())) {
          out.exact = Jq::diag(p.p.rational(), p.p.rational(), p.lambda1.rational()) +
                      Jq::Fi1(2, *qr * Octonion<Rational>::one());
        }
      }
      break;
    }
    case 5:
    case 6:
    case 7:
    case 8: {
      const auto& p = std::get<ParamsDoubleRoot>(c.params);
      Jq base = c.case_id == 5 ? Jq::diag(p.lambda1, p.lambda2, p.lambda2)
                               : Jq::diag(p.lambda2, p.lambda2, p.lambda1);
      if (c.case_id == 7) base = base + Jq::Pplus();
      if (c.case_id == 8) base = base + Jq::Pminus();
      out.exact = base;
      break;
    }
    default: {
      const auto& p = std::get<ParamsTripleRoot>(c.params);
      Jq base = p.lambda * Jq::unitE();
      if (c.case_id == 10) base = base + Jq::Pplus();
      if (c.case_id == 11) base = base + Jq::Pminus();
      if (c.case_id == 12) base = base + Jq::Qplus(Octonion<Rational>::one());
      out.exact = base;
      break;
    }
  }
  if (out.exact) {
    for (int k = 0; k < 27; ++k) out.approx.set_coord(k, to_double(out.exact->coord(k)));
  }
  return out;
}

}  // namespace albert
