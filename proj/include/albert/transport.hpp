#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "albert/classify.hpp"
#include "albert/f4group.hpp"

namespace albert {

// Per-step and end-to-end float residual budgets.
inline constexpr double kStepTol = 1e-10;
inline constexpr double kEndTol = 1e-8;

namespace transport_detail {

template <class S>
S sqrt_or_bail(const S& v) {
  const auto r = scalar_ops<S>::try_sqrt(v);
  if (!r) {
    if constexpr (scalar_ops<S>::exact)
      throw ExactSqrtUnavailable();
    else
      throw NotInStratum("negative value under square root");
  }
  return *r;
}

// Scalar conversions Rational -> S for plan parameters.
template <class S>
S from_rational(const Rational& v);
template <>
inline Rational from_rational<Rational>(const Rational& v) { return v; }
template <>
inline double from_rational<double>(const Rational& v) { return to_double(v); }

template <class S>
S root_value(const AlgebraicReal& r) {
  if constexpr (scalar_ops<S>::exact) {
    if (!r.is_rational()) throw ExactSqrtUnavailable("irrational characteristic root");
    return r.rational();
  } else {
    return r.approx();
  }
}

// Word under construction: cur tracks the element the ops were derived from.
// Step checks are relative to the driver's magnitude (float rounding scales
// with the coordinates, which grow under boosts).
template <class S>
struct Mover {
  std::vector<F4Operator<S>> ops;
  JordanElement<S> cur;
  double scale = 1;

  explicit Mover(JordanElement<S> start, double ambient_scale = 1)
      : cur(std::move(start)), scale(std::max(ambient_scale, 1.0)) {
    scale = std::max(scale, jmax_abs(cur));
  }
  void push(const F4Operator<S>& op) {
    ops.push_back(op);
    cur = op.apply(cur);
    scale = std::max(scale, jmax_abs(cur));
  }
  void check(const JordanElement<S>& want, double tol, const char* where = "step") const {
    if constexpr (scalar_ops<S>::exact) {
      if (!(cur == want))
        throw InconsistentPaper(std::string("exact transport missed its target at ") + where);
    } else {
      // quadratic envelope: float products of values at scale M round at M^2 eps
      if (jmax_abs(cur - want) > tol * scale * scale)
        throw ResidualTooLarge(std::string("transport residual at ") + where + ": " +
                               std::to_string(jmax_abs(cur - want)) + " budget " +
                               std::to_string(tol * scale * scale));
    }
  }
};

// Kill the imaginary directions of slot j: x_j -> sqrt(n(x_j)) e0.
template <class S>
void mover_normalize_slot(Mover<S>& m, int j) {
  const Octonion<S> xj = m.cur.x[static_cast<std::size_t>(j)];
  if (oct_is_zero(xj)) return;
  const S n = sqrt_or_bail(oct_norm(xj));
  Octonion<S> a = (S(1) / n) * oct_conj(xj);
  if constexpr (!scalar_ops<S>::exact) a = (S(1) / std::sqrt(oct_norm(a))) * a;
  m.push(phi0(triality_triple_LRT(a, j)));
}

// Rotation with (cos 2t, sin 2t) = (c2, s2); c2^2 + s2^2 = 1. On the float
// backend the pair is renormalized onto the circle first: parameters carry
// the accumulated error of earlier steps, and an off-manifold atom is off the
// group by the same distance.
template <class S>
F4Operator<S> rot_double_angle(S c2, S s2) {
  if constexpr (!scalar_ops<S>::exact) {
    const S n = std::sqrt(c2 * c2 + s2 * s2);
    c2 /= n;
    s2 /= n;
  }
  if (scalar_ops<S>::is_zero(c2 + S(1))) return exp_rot(Octonion<S>::one(), S(0), S(1));
  const S c = sqrt_or_bail((S(1) + c2) / S(2));
  const S s = s2 / (S(2) * c);
  return exp_rot(Octonion<S>::one(), c, s);
}

// Boost at slot 3 with (cosh 2t, sinh 2t) = (c2, s2); c2^2 - s2^2 = 1, c2 >= 1.
template <class S>
F4Operator<S> boost_double_angle(S c2, S s2) {
  if constexpr (!scalar_ops<S>::exact) {
    const S n = std::sqrt(c2 * c2 - s2 * s2);
    c2 /= n;
    s2 /= n;
  }
  const S ch = sqrt_or_bail((c2 + S(1)) / S(2));
  const S sh = s2 / (S(2) * ch);
  return exp_boost(2, Octonion<S>::one(), ch, sh);
}

template <class S>
F4Operator<S> swap23() {
  return exp_rot(Octonion<S>::one(), S(0), S(1));
}
// phi0(1,-1,-1): flips the F2^1 and F3^1 slots.
template <class S>
F4Operator<S> sign_flip23() {
  return sigma_op<S>(0);
}

// cur in span{E2-E3, F1^1(O)} with Q > 0: send to sqrt(Q) (E2 - E3).
// q_known, when supplied, is the exactly-known sqrt(Q) (avoids a cancellation
// under the square root on the float backend).
template <class S>
void mover_sphere8(Mover<S>& m, std::optional<S> q_known = std::nullopt) {
  mover_normalize_slot(m, 0);
  const S xi = m.cur.xi[1];
  const S r = m.cur.x[0][0];
  const S q = q_known ? *q_known : sqrt_or_bail(xi * xi + r * r);
  if (scalar_ops<S>::is_zero(q)) return;
  m.push(rot_double_angle(xi / q, r / q));
}

// cur in span{E1-E2, F3^1(O)} with Q > 0: send to sign * sqrt(Q) (E1 - E2).
template <class S>
void mover_pseudosphere81(Mover<S>& m, int sign, std::optional<S> q_known = std::nullopt) {
  mover_normalize_slot(m, 2);
  const S xi = m.cur.xi[0];
  const S r = m.cur.x[2][0];
  const S q = q_known ? *q_known : sqrt_or_bail(xi * xi - r * r);
  const S sg = S(sign);
  m.push(boost_double_angle(sg * xi / q, sg * r / q));
}

// cur in span{E1-E2, F3^1(O)} with Q = -1 scaled by q: send to F3^1(q), q>0.
template <class S>
void mover_sphere81_neg(Mover<S>& m, std::optional<S> q_known = std::nullopt) {
  mover_normalize_slot(m, 2);
  const S xi = m.cur.xi[0];
  const S r = m.cur.x[2][0];
  const S q = q_known ? *q_known : sqrt_or_bail(r * r - xi * xi);
  m.push(boost_double_angle(r / q, xi / q));
  if (scalar_ops<S>::sign(m.cur.x[2][0]) < 0) m.push(sign_flip23<S>());
}

// cur in the null cone of span{E1-E2, F3^1(O)}: send to P+ (sign>0) or P- (sign<0).
template <class S>
void mover_nullcone81(Mover<S>& m, int sign) {
  mover_normalize_slot(m, 2);
  const S z = S(sign) * m.cur.xi[0];
  if (!(to_double(z) > 0)) throw NotInStratum("null-cone element on the wrong side");
  // (cosh 2t, sinh 2t) = ((z+1/z)/2, +-(z-1/z)/2)
  const S c2 = (z + S(1) / z) / S(2);
  const S s2 = S(sign) * (z - S(1) / z) / S(2);
  m.push(boost_double_angle(c2, s2));
}

// Reduce cur (sharp = 0 after killing the F1 slot) to the form
// a E1 + b E2 + F3^1(v).
template <class S>
void mover_to_two_by_two(Mover<S>& m) {
  // (a) rotate the J^1_{Lx(2E1),-1} component onto E2-E3
  {
    const S xi = (m.cur.xi[1] - m.cur.xi[2]) / S(2);
    const S r2 = xi * xi + oct_norm(m.cur.x[0]);
    if (!scalar_ops<S>::is_zero(r2)) {
      mover_normalize_slot(m, 0);
      const S xi2 = (m.cur.xi[1] - m.cur.xi[2]) / S(2);
      const S r = m.cur.x[0][0];
      const S q = sqrt_or_bail(xi2 * xi2 + r * r);
      m.push(rot_double_angle(xi2 / q, r / q));
    }
  }
  // (b) sharp(cur) = 0 forces xi2 * xi3 = 0; bring the zero to slot 3
  const double d2 = std::fabs(to_double(m.cur.xi[1]));
  const double d3 = std::fabs(to_double(m.cur.xi[2]));
  if (d3 > d2) m.push(swap23<S>());
}

// cur in calH (sharp=0, tr=1): send to E1 (to_H) or E3 (!to_H).
template <class S>
void mover_hyperbolic(Mover<S>& m, bool to_H) {
  mover_to_two_by_two(m);
  mover_normalize_slot(m, 2);
  const S d = m.cur.xi[0] - m.cur.xi[1];
  const S r = S(2) * m.cur.x[2][0];
  // Q(2Y') = 1 exactly on calH; using the exact value sidesteps the
  // cancellation in d^2 - r^2 for large coordinates
  const S sg = to_H ? S(1) : S(-1);
  m.push(boost_double_angle(sg * d, sg * r));
  if (!to_H) m.push(swap23<S>());
  m.check(JordanElement<S>::Ei(to_H ? 0 : 2), kStepTol, "hyperbolic");
}

// cur in N1+- (sharp=0, tr=0, cur != 0): send to P+ (sign>0) or P- (sign<0).
template <class S>
void mover_nullcone(Mover<S>& m, int sign) {
  mover_to_two_by_two(m);
  mover_nullcone81(m, sign);
  m.check(sign > 0 ? JordanElement<S>::Pplus() : JordanElement<S>::Pminus(), kStepTol, "nullcone");
}

// cur = r P- + Q+(x) with n(x)=1: send to Q+(1) through the P- stabilizer.
template <class S>
void mover_r_minus(Mover<S>& m) {
  auto qslot = [&m] { return m.cur.x[0]; };
  auto g2_move = [&m](const Octonion<S>& a) {
    const TrialityTriple<S> t = g2_mapping_to_e1(a);
    m.push(phi0(t));
  };
  auto pair_move = [&m](int b, int a) {
    m.push(phi0(spin7_pair(Octonion<S>::unit(b), Octonion<S>::unit(a))));
  };
  // Step 1: if the Q+ slot has a small scalar part, rotate it to a value with
  // Re bounded away from 0 (the alpha_{1,2} parameter in Step 2 divides by it).
  // The exact backend only needs this when Re = 0 exactly.
  const bool small_re = scalar_ops<S>::exact
                            ? scalar_ops<S>::is_zero(oct_re(qslot()))
                            : std::fabs(to_double(oct_re(qslot()))) <
                                  std::sqrt(to_double(oct_norm(qslot()))) / 2;
  if (small_re) {
    const Octonion<S> im = oct_im(qslot());
    const S n = sqrt_or_bail(oct_norm(im));
    g2_move((S(1) / n) * im);
    pair_move(3, 2);  // c e1 + s -> s - c e1 after e3(e2 .)
  }
  // Step 2: strip the P- coefficient with alpha_{1,2}(t) = exp(G_1(-t))
  {
    const S r = m.cur.xi[1];
    const S u = oct_re(qslot());
    if (!scalar_ops<S>::is_zero(r)) {
      if (scalar_ops<S>::is_zero(u)) throw NotInStratum("cannot strip P- coefficient: Re = 0");
      const S t = r / (S(2) * u);
      m.push(exp_g(1, (-t) * Octonion<S>::one()));
    }
  }
  // Step 3: rotate the unit slot value to 1
  {
    const Octonion<S> im = oct_im(qslot());
    if (!oct_is_zero(im)) {
      const S n = sqrt_or_bail(oct_norm(im));
      g2_move((S(1) / n) * im);
      pair_move(1, 2);  // cos + e1 sin -> e3 cos + e2 sin (imaginary)
      const Octonion<S> im2 = oct_im(qslot());
      const S n2 = sqrt_or_bail(oct_norm(im2));
      g2_move((S(1) / n2) * im2);
      pair_move(3, 2);  // e1 -> 1
    } else if (scalar_ops<S>::sign(oct_re(qslot())) < 0) {
      pair_move(1, 2);
      const Octonion<S> im2 = oct_im(qslot());
      const S n2 = sqrt_or_bail(oct_norm(im2));
      g2_move((S(1) / n2) * im2);
      pair_move(3, 2);
    }
  }
  m.check(JordanElement<S>::Qplus(Octonion<S>::one()), kStepTol, "r_minus");
}

}  // namespace transport_detail

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

// Kill the imaginary part of slot j by a phi0 of an L/R/T triple.
template <class S>
std::pair<F4Operator<S>, JordanElement<S>> normalize_slot(const JordanElement<S>& X, int j) {
  transport_detail::Mover<S> m(X);
  transport_detail::mover_normalize_slot(m, j);
  F4Operator<S> g = F4Operator<S>::identity();
  for (const auto& op : m.ops) g = compose(op, g);
  return {g, m.cur};
}

// Transport inside the spheres / pseudo-spheres / null cones of the E1 and
// E3 eigenspaces; dispatches on the stratum.
template <class S>
std::pair<F4Operator<S>, JordanElement<S>> sphere_transport(const JordanElement<S>& X) {
  using namespace transport_detail;
  auto in_E1_eigenspace = [&X] {
    return scalar_ops<S>::is_zero(X.xi[0]) && scalar_ops<S>::is_zero(X.xi[1] + X.xi[2]) &&
           oct_is_zero(X.x[1]) && oct_is_zero(X.x[2]);
  };
  auto in_E3_eigenspace = [&X] {
    return scalar_ops<S>::is_zero(X.xi[2]) && scalar_ops<S>::is_zero(X.xi[0] + X.xi[1]) &&
           oct_is_zero(X.x[0]) && oct_is_zero(X.x[1]);
  };
  Mover<S> m(X);
  const S q = q_form(X);
  if (in_E1_eigenspace()) {
    if (!scalar_ops<S>::is_zero(q - S(1))) throw NotInStratum("not on S^8");
    mover_sphere8(m);
    m.check(JordanElement<S>::Ei(1) - JordanElement<S>::Ei(2), kStepTol);
  } else if (in_E3_eigenspace()) {
    if (scalar_ops<S>::is_zero(q - S(1))) {
      const int sign = scalar_ops<S>::sign(inner(X, JordanElement<S>::Ei(0))) >= 0 ? 1 : -1;
      mover_pseudosphere81(m, sign);
      const JordanElement<S> t = JordanElement<S>::Ei(0) - JordanElement<S>::Ei(1);
      m.check(sign > 0 ? t : -t, kStepTol);
    } else if (scalar_ops<S>::is_zero(q + S(1))) {
      mover_sphere81_neg(m);
      m.check(JordanElement<S>::Fi1(2, Octonion<S>::one()), kStepTol);
    } else if (scalar_ops<S>::is_zero(q) && !jis_zero(X)) {
      const int sign = scalar_ops<S>::sign(inner(X, JordanElement<S>::Ei(0))) >= 0 ? 1 : -1;
      mover_nullcone81(m, sign);
      m.check(sign > 0 ? JordanElement<S>::Pplus() : JordanElement<S>::Pminus(), kStepTol);
    } else {
      throw NotInStratum("Q value fits no sphere or null-cone stratum");
    }
  } else {
    throw NotInStratum("element lies in neither eigenspace");
  }
  F4Operator<S> g = F4Operator<S>::identity();
  for (const auto& op : m.ops) g = compose(op, g);
  return {g, m.cur};
}

struct TransportResult {
  bool exact = false;
  std::optional<F4Operator<Rational>> g_exact;
  std::optional<JordanElement<Rational>> target_exact;
  std::optional<F4Operator<double>> g_float;
  std::optional<JordanElement<double>> target_float;
  double residual = 0;
  double charpoly_drift = 0;
};

namespace transport_detail {

template <class S>
struct PlanOutput {
  std::vector<F4Operator<S>> ops;
  JordanElement<S> finalX;
};

template <class S>
PlanOutput<S> plan_reduce(const JordanElement<S>& X0, const OrbitClass& oc,
                          const JordanElement<S>& target) {
  PlanOutput<S> out{{}, X0};
  // conditioning scale of the whole plan: incoming float error at any step is
  // proportional to the largest magnitude seen anywhere so far
  double plan_scale = std::max(1.0, jmax_abs(X0));
  auto apply_ops = [&out, &plan_scale](const std::vector<F4Operator<S>>& ops) {
    for (const auto& op : ops) {
      out.ops.push_back(op);
      out.finalX = op.apply(out.finalX);
      plan_scale = std::max(plan_scale, jmax_abs(out.finalX));
    }
  };
  auto track = [&plan_scale](const Mover<S>& m) { plan_scale = std::max(plan_scale, m.scale); };
  const S trX = trace(X0);

  switch (oc.case_id) {
    case 1:
    case 2:
    case 3: {
      const auto& prm = std::get<ParamsDistinct>(oc.params);
      const S lam = root_value<S>(prm.roots[static_cast<std::size_t>(prm.h_index - 1)]);
      // 1. move E_{X,lam} (in H(O)) to E1
      Mover<S> mh(e_lambda(out.finalX, lam), plan_scale);
      mover_hyperbolic(mh, /*to_H=*/true);
      track(mh);
      apply_ops(mh.ops);
      // 2. move W onto E2-E3; sqrt(Q(W)) = (lam_{i+1} - lam_{i+2})/2 exactly
      {
        const S mu = (trX - lam) / S(2);
        const JordanElement<S> W =
            out.finalX - (lam * JordanElement<S>::Ei(0) +
                          mu * (JordanElement<S>::unitE() - JordanElement<S>::Ei(0)));
        const int hi_idx = prm.h_index == 1 ? 1 : 0;
        const int lo_idx = prm.h_index == 3 ? 1 : 2;
        const S hi = root_value<S>(prm.roots[static_cast<std::size_t>(hi_idx)]);
        const S lo = root_value<S>(prm.roots[static_cast<std::size_t>(lo_idx)]);
        Mover<S> mw(W, plan_scale);
        mover_sphere8(mw, std::optional<S>((hi - lo) / S(2)));
        track(mw);
        apply_ops(mw.ops);
      }
      // 3. canonical order: case 2 needs one slot-2/3 swap
      if (oc.case_id == 2) apply_ops({swap23<S>()});
      break;
    }
    case 4: {
      const auto& prm = std::get<ParamsComplexPair>(oc.params);
      const S lam = root_value<S>(prm.lambda1);
      Mover<S> mh(e_lambda(out.finalX, lam), plan_scale);
      mover_hyperbolic(mh, /*to_H=*/false);
      track(mh);
      apply_ops(mh.ops);
      const S mu = (trX - lam) / S(2);
      const JordanElement<S> W =
          out.finalX - (lam * JordanElement<S>::Ei(2) +
                        mu * (JordanElement<S>::unitE() - JordanElement<S>::Ei(2)));
      // sqrt(-Q(W)) = q exactly, from the root data
      const S q = sqrt_or_bail(root_value<S>(prm.q_squared));
      Mover<S> mw(W, plan_scale);
      mover_sphere81_neg(mw, std::optional<S>(q));
      track(mw);
      apply_ops(mw.ops);
      break;
    }
    case 5:
    case 6:
    case 7:
    case 8: {
      const auto& prm = std::get<ParamsDoubleRoot>(oc.params);
      const S lam = from_rational<S>(prm.lambda1);
      Mover<S> mh(e_lambda(out.finalX, lam), plan_scale);
      mover_hyperbolic(mh, /*to_H=*/oc.case_id == 5);
      track(mh);
      apply_ops(mh.ops);
      if (oc.case_id == 7 || oc.case_id == 8) {
        const S mu = from_rational<S>(prm.lambda2);
        const JordanElement<S> W =
            out.finalX - (lam * JordanElement<S>::Ei(2) +
                          mu * (JordanElement<S>::unitE() - JordanElement<S>::Ei(2)));
        Mover<S> mw(W, plan_scale);
        mover_nullcone(mw, oc.case_id == 7 ? 1 : -1);
        track(mw);
        apply_ops(mw.ops);
      }
      break;
    }
    case 9:
      break;
    case 10:
    case 11: {
      Mover<S> mz(p_traceless(out.finalX), plan_scale);
      mover_nullcone(mz, oc.case_id == 10 ? 1 : -1);
      track(mz);
      apply_ops(mz.ops);
      break;
    }
    case 12: {
      // 1. move sharp(p(X)) (in N1-) to P-
      {
        Mover<S> ms(sharp(p_traceless(out.finalX)), plan_scale);
        mover_nullcone(ms, -1);
        track(ms);
        apply_ops(ms.ops);
      }
      // 2. p(X) now lies in R^-; run the P- stabilizer chain to Q+(1)
      {
        Mover<S> mr(p_traceless(out.finalX), plan_scale);
        mover_r_minus(mr);
        track(mr);
        apply_ops(mr.ops);
      }
      break;
    }
    default:
      throw DomainError("reduce: bad case id");
  }
  // final check against the canonical target
  if constexpr (scalar_ops<S>::exact) {
    if (!(out.finalX == target)) throw InconsistentPaper("exact reduction missed canonical form");
  } else {
    if (jmax_abs(out.finalX - target) > kEndTol)
      throw ResidualTooLarge("end-to-end transport residual too large");
  }
  return out;
}

}  // namespace transport_detail

// Construct an explicit transporter word sending X to its canonical form.
// The plan is attempted on the exact backend first and falls back to the
// float backend when an irrational square root (or root) is required.
inline TransportResult reduce(const JordanElement<Rational>& X, const OrbitClass& oc) {
  using namespace transport_detail;
  TransportResult res;
  const CanonicalForm cf = canonical_form(oc);
  if (cf.exact) {
    try {
      PlanOutput<Rational> plan = plan_reduce<Rational>(X, oc, *cf.exact);
      F4Operator<Rational> g = F4Operator<Rational>::identity();
      for (const auto& op : plan.ops) g = compose(op, g);
      verify_automorphism(g);
      res.exact = true;
      res.g_exact = std::move(g);
      res.target_exact = *cf.exact;
      res.residual = 0;
      res.charpoly_drift = 0;
      return res;
    } catch (const ExactSqrtUnavailable&) {
      // fall through to the float plan
    }
  }
  const JordanElement<double> Xf = to_float(X);
  PlanOutput<double> plan = plan_reduce<double>(Xf, oc, cf.approx);
  F4Operator<double> g = F4Operator<double>::identity();
  double cond = 1;
  for (const auto& op : plan.ops) {
    g = compose(op, g);
    cond = std::min(1e15, cond * std::max(1.0, op.m.max_abs_double()));
  }
  // each float atom individually deviates from the group by up to the base
  // tolerance; a word of n atoms accumulates n times that, amplified by the
  // product of atom magnitudes
  cond *= static_cast<double>(plan.ops.size() + 1);
  verify_automorphism(g, cond);
  res.exact = false;
  res.residual = jmax_abs(g.apply(Xf) - cf.approx);
  {
    const CubicPoly<double> a = charpoly(g.apply(Xf));
    const CubicPoly<double> b = charpoly(Xf);
    res.charpoly_drift = std::max({std::fabs(a.t - b.t), std::fabs(a.s - b.s), std::fabs(a.d - b.d)});
  }
  if (res.residual > kEndTol) throw ResidualTooLarge();
  res.g_float = std::move(g);
  res.target_float = cf.approx;
  return res;
}

inline TransportResult reduce(const JordanElement<Rational>& X) { return reduce(X, classify(X)); }

}  // namespace albert
