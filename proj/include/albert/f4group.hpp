#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "albert/jordan.hpp"
#include "albert/linalg.hpp"
#include "albert/octonion.hpp"

namespace albert {

// ---------------------------------------------------------------------------
// 8x8 octonion operator helpers
// ---------------------------------------------------------------------------

template <class S>
Mat<S> left_mul_matrix(const Octonion<S>& a) {
  Mat<S> m(8, 8);
  for (int j = 0; j < 8; ++j) {
    const Octonion<S> col = a * Octonion<S>::unit(j);
    for (int i = 0; i < 8; ++i) m(i, j) = col[i];
  }
  return m;
}

template <class S>
Mat<S> right_mul_matrix(const Octonion<S>& a) {
  Mat<S> m(8, 8);
  for (int j = 0; j < 8; ++j) {
    const Octonion<S> col = Octonion<S>::unit(j) * a;
    for (int i = 0; i < 8; ++i) m(i, j) = col[i];
  }
  return m;
}

template <class S>
Octonion<S> mat_apply_oct(const Mat<S>& m, const Octonion<S>& v) {
  Octonion<S> r;
  for (int i = 0; i < 8; ++i) {
    S acc(0);
    for (int j = 0; j < 8; ++j) acc += m(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

// eps g eps with eps = octonion conjugation as an O(8) matrix
template <class S>
Mat<S> conj_by_eps(const Mat<S>& g) {
  Mat<S> r = g;
  // eps g eps flips the sign of entries mixing the real axis with Im O
  for (int i = 1; i < 8; ++i) {
    r(i, 0) = -r(i, 0);
    r(0, i) = -r(0, i);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Triality triples: (g1,g2,g3) in SO(8)^3 with (g1 x)(g2 y) = eps g3 eps (xy)
// ---------------------------------------------------------------------------

template <class S>
struct TrialityTriple {
  Mat<S> g1{8, 8}, g2{8, 8}, g3{8, 8};

  static TrialityTriple identity() {
    return {Mat<S>::identity(8), Mat<S>::identity(8), Mat<S>::identity(8)};
  }

  TrialityTriple compose(const TrialityTriple& o) const {
    return {g1 * o.g1, g2 * o.g2, g3 * o.g3};
  }
  TrialityTriple inverse() const { return {g1.transpose(), g2.transpose(), g3.transpose()}; }
  // (g1,g2,g3) in D4~ iff (g2,g3,g1) is; rotate so the original slot-1
  // component lands at the requested slot.
  TrialityTriple rotate_to_slot(int slot) const {
    if (slot == 0) return *this;
    if (slot == 1) return {g3, g1, g2};
    return {g2, g3, g1};
  }

  bool is_orthogonal() const {
    const Mat<S> i = Mat<S>::identity(8);
    return (g1.transpose() * g1 - i).is_zero() && (g2.transpose() * g2 - i).is_zero() &&
           (g3.transpose() * g3 - i).is_zero();
  }
  // Full 64-pair triality check.
  bool is_triality() const {
    if (!is_orthogonal()) return false;
    for (int i = 0; i < 8; ++i) {
      const Octonion<S> gi = mat_apply_oct(g1, Octonion<S>::unit(i));
      for (int j = 0; j < 8; ++j) {
        const Octonion<S> gj = mat_apply_oct(g2, Octonion<S>::unit(j));
        const Octonion<S> lhs = gi * gj;
        Octonion<S> rhs =
            oct_conj(mat_apply_oct(g3, oct_conj(Octonion<S>::unit(i) * Octonion<S>::unit(j))));
        Octonion<S> d = lhs - rhs;
        if (!oct_is_zero(d)) return false;
      }
    }
    return true;
  }
  bool is_spin7() const {
    const Octonion<S> img = mat_apply_oct(g3, Octonion<S>::one());
    return oct_is_zero(img - Octonion<S>::one());
  }
  bool is_g2() const {
    return is_spin7() && (g1 - g2).is_zero() && (g1 - g3).is_zero();
  }
};

// (L_a, R_a, eps T_a eps) is a triality triple for any unit a (Moufang).
template <class S>
TrialityTriple<S> triality_triple_LRT(const Octonion<S>& a, int slot) {
  if (!oct_is_unit(a)) throw NotUnit();
  const Mat<S> L = left_mul_matrix(a), R = right_mul_matrix(a);
  TrialityTriple<S> t{L, R, conj_by_eps(L * R)};
  return t.rotate_to_slot(slot);
}

// (L_{b,a}, R_{b,a}, T_{b,a}) is a Spin(7) triple for imaginary units a, b.
template <class S>
TrialityTriple<S> spin7_pair(const Octonion<S>& b, const Octonion<S>& a) {
  if (!oct_is_unit(a) || !oct_is_unit(b)) throw NotUnit();
  if (!oct_is_imaginary(a) || !oct_is_imaginary(b)) throw NotImaginary();
  const Mat<S> La = left_mul_matrix(a), Lb = left_mul_matrix(b);
  const Mat<S> Ra = right_mul_matrix(a), Rb = right_mul_matrix(b);
  return {Lb * La, Rb * Ra, (Lb * Rb) * (La * Ra)};
}

// An automorphism of O from a Cayley frame: f1, f2 orthonormal imaginary,
// f4 a unit imaginary orthogonal to f1, f2 and f1 f2. The map e_i -> f_i
// (with f3=f1f2, f5=f1f4, f6=f4f2, f7=f3f4 matching the multiplication
// table's triples) extends the frame to a G2 element.
template <class S>
TrialityTriple<S> g2_from_frame(const Octonion<S>& f1, const Octonion<S>& f2,
                                const Octonion<S>& f4) {
  const Octonion<S> f3 = f1 * f2, f5 = f1 * f4, f6 = f4 * f2, f7 = f3 * f4;
  Mat<S> m(8, 8);
  const Octonion<S> cols[8] = {Octonion<S>::one(), f1, f2, f3, f4, f5, f6, f7};
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 8; ++i) m(i, j) = cols[j][i];
  TrialityTriple<S> t{m, m, m};
  if (!t.is_triality()) throw NotTriality("frame does not generate an automorphism");
  return t;
}

// G2 element sending the imaginary unit a to e1 (transpose of the frame map).
template <class S>
TrialityTriple<S> g2_mapping_to_e1(const Octonion<S>& a) {
  if (!oct_is_unit(a)) throw NotUnit();
  if (!oct_is_imaginary(a)) throw NotImaginary();
  // complete a to a frame by exact Gram-Schmidt against basis vectors;
  // requires the norms met along the way to be perfect squares on the exact
  // backend (callers fall back to the float backend otherwise).
  auto normalize = [](const Octonion<S>& v) -> std::optional<Octonion<S>> {
    const auto n = scalar_ops<S>::try_sqrt(oct_norm(v));
    if (!n || scalar_ops<S>::is_zero(*n)) return std::nullopt;
    return (S(1) / *n) * v;
  };
  const Octonion<S> f1 = a;
  std::optional<Octonion<S>> f2;
  bool saw_candidate = false;
  for (int k = 1; k < 8 && !f2; ++k) {
    Octonion<S> v = Octonion<S>::unit(k) - oct_inner(Octonion<S>::unit(k), f1) * f1;
    v[0] = S(0);
    if (!oct_is_zero(v)) {
      saw_candidate = true;
      f2 = normalize(v);
    }
  }
  if (!f2) {
    if (saw_candidate) throw ExactSqrtUnavailable();
    throw SingularSystem("no orthogonal complement");
  }
  const Octonion<S> f3 = f1 * (*f2);
  std::optional<Octonion<S>> f4;
  saw_candidate = false;
  for (int k = 1; k < 8 && !f4; ++k) {
    Octonion<S> v = Octonion<S>::unit(k);
    v = v - oct_inner(v, f1) * f1;
    v = v - oct_inner(v, *f2) * (*f2);
    v = v - oct_inner(v, f3) * f3;
    v[0] = S(0);
    if (!oct_is_zero(v)) {
      saw_candidate = true;
      f4 = normalize(v);
    }
  }
  if (!f4) {
    if (saw_candidate) throw ExactSqrtUnavailable();
    throw SingularSystem("no orthogonal complement");
  }
  TrialityTriple<S> t = g2_from_frame(f1, *f2, *f4);
  return t.inverse();
}

// ---------------------------------------------------------------------------
// Infinitesimal triality: complete a skew D1 to the unique (D2, D3)
// ---------------------------------------------------------------------------

// Solves (D1 x) y + x (D2 y) = eps D3 eps (xy) over all 64 basis pairs for
// skew unknowns D2, D3; the solution exists and is unique.
template <class S>
std::pair<Mat<S>, Mat<S>> triality_complete(const Mat<S>& D1) {
  if (!(D1 + D1.transpose()).is_zero()) throw SingularSystem("D1 must be skew-symmetric");
  // unknown order: 28 entries of D2 (pairs (i<j)), then 28 of D3
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) pairs.emplace_back(i, j);
  Mat<S> A(512, 56);
  std::vector<S> b(512, S(0));
  for (int xi = 0; xi < 8; ++xi) {
    const Octonion<S> x = Octonion<S>::unit(xi);
    const Octonion<S> d1x = mat_apply_oct(D1, x);
    for (int yi = 0; yi < 8; ++yi) {
      const Octonion<S> y = Octonion<S>::unit(yi);
      const int row0 = (xi * 8 + yi) * 8;
      const Octonion<S> lhs0 = d1x * y;
      for (int r = 0; r < 8; ++r) b[static_cast<std::size_t>(row0 + r)] = -lhs0[r];
      const Octonion<S> cxy = oct_conj(x * y);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        // D2 basis element E_ij - E_ji applied to y
        Octonion<S> d2y;
        d2y[i] = y[j];
        d2y[j] = -y[i];
        const Octonion<S> t2 = x * d2y;
        // eps D3 eps (xy) = conj(D3 conj(xy)), moved to the left side
        Octonion<S> d3c;
        d3c[i] = cxy[j];
        d3c[j] = -cxy[i];
        const Octonion<S> t3 = oct_conj(d3c);
        for (int r = 0; r < 8; ++r) {
          A(row0 + r, static_cast<int>(k)) += t2[r];
          A(row0 + r, static_cast<int>(k + 28)) -= t3[r];
        }
      }
    }
  }
  const auto sol = solve_unique(A, b);
  if (!sol) throw SingularSystem("triality completion system unsolvable");
  Mat<S> D2(8, 8), D3(8, 8);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    D2(i, j) = (*sol)[k];
    D2(j, i) = -(*sol)[k];
    D3(i, j) = (*sol)[k + 28];
    D3(j, i) = -(*sol)[k + 28];
  }
  return {D2, D3};
}

// ---------------------------------------------------------------------------
// Lie algebra elements: dphi0(D1,D2,D3) + sum_i A~_i^1(a_i)
// ---------------------------------------------------------------------------

// Realized 27x27 matrix of A~_i^1(a) from the six-case action table.
template <class S>
Mat<S> lie_A_matrix(int i, const Octonion<S>& a) {
  Mat<S> m(27, 27);
  const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
  auto put = [&m](const JordanElement<S>& v, int col) {
    for (int r = 0; r < 27; ++r) m(r, col) = v.coord(r);
  };
  // E_i -> 0; E_{i+1} -> F_i(-a); E_{i+2} -> F_i(a)
  put(JordanElement<S>::Fi1(i, -a), i1);
  put(JordanElement<S>::Fi1(i, a), i2);
  for (int j = 0; j < 8; ++j) {
    const Octonion<S> x = Octonion<S>::unit(j);
    // F_i(x) -> eps(i) 2 (a|x) (E_{i+1} - E_{i+2})
    {
      const S c = (eps0(i) > 0 ? S(2) : S(-2)) * a[j];
      JordanElement<S> v;
      v.xi[static_cast<std::size_t>(i1)] = c;
      v.xi[static_cast<std::size_t>(i2)] = -c;
      put(v, 3 + 8 * i + j);
    }
    // F_{i+1}(x) -> F_{i+2}(-eps(i+2) conj(a x))
    {
      Octonion<S> w = oct_conj(a * x);
      put(JordanElement<S>::Fi1(i2, eps0(i2) > 0 ? -w : w), 3 + 8 * i1 + j);
    }
    // F_{i+2}(x) -> F_{i+1}(eps(i+1) conj(x a))
    {
      Octonion<S> w = oct_conj(x * a);
      put(JordanElement<S>::Fi1(i1, eps0(i1) > 0 ? w : -w), 3 + 8 * i2 + j);
    }
  }
  return m;
}

template <class S>
Mat<S> dphi0_matrix(const Mat<S>& D1, const Mat<S>& D2, const Mat<S>& D3) {
  Mat<S> m(27, 27);
  const Mat<S>* ds[3] = {&D1, &D2, &D3};
  for (int blk = 0; blk < 3; ++blk)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m(3 + 8 * blk + i, 3 + 8 * blk + j) = (*ds[blk])(i, j);
  return m;
}

template <class S>
struct LieElement {
  std::array<Mat<S>, 3> D{Mat<S>(8, 8), Mat<S>(8, 8), Mat<S>(8, 8)};
  std::array<Octonion<S>, 3> a{};
  Mat<S> m{27, 27};

  static LieElement zero() { return LieElement{}; }

  friend LieElement operator+(const LieElement& u, const LieElement& v) {
    LieElement r;
    for (int i = 0; i < 3; ++i) {
      r.D[i] = u.D[i] + v.D[i];
      r.a[i] = u.a[i] + v.a[i];
    }
    r.m = u.m + v.m;
    return r;
  }
  friend LieElement operator-(const LieElement& u, const LieElement& v) {
    LieElement r;
    for (int i = 0; i < 3; ++i) {
      r.D[i] = u.D[i] - v.D[i];
      r.a[i] = u.a[i] - v.a[i];
    }
    r.m = u.m - v.m;
    return r;
  }
  friend LieElement operator*(const S& c, const LieElement& v) {
    LieElement r;
    for (int i = 0; i < 3; ++i) {
      r.D[i] = c * v.D[i];
      r.a[i] = c * v.a[i];
    }
    r.m = c * v.m;
    return r;
  }
  JordanElement<S> apply(const JordanElement<S>& X) const {
    return JordanElement<S>::from_vec(m.apply(X.to_vec()));
  }
};

template <class S>
LieElement<S> lie_A(int i, const Octonion<S>& a) {
  LieElement<S> r;
  r.a[static_cast<std::size_t>(i)] = a;
  r.m = lie_A_matrix(i, a);
  return r;
}

template <class S>
LieElement<S> lie_dphi0(const Mat<S>& D1, const Mat<S>& D2, const Mat<S>& D3) {
  LieElement<S> r;
  r.D = {D1, D2, D3};
  r.m = dphi0_matrix(D1, D2, D3);
  return r;
}

// delta(p) = dphi0(l_p, r_p, t_{-p}) for imaginary p.
template <class S>
LieElement<S> lie_delta(const Octonion<S>& p) {
  if (!oct_is_imaginary(p)) throw NotImaginary();
  const Mat<S> L = left_mul_matrix(p), R = right_mul_matrix(p);
  Mat<S> T(8, 8);
  T = L + R;
  Mat<S> negT(8, 8);
  negT = S(-1) * T;
  return lie_dphi0(L, R, negT);
}

// G_1(x)=A1(x)+A2(-conj x); G_2(p)=A3(-p)-delta(p);
// G_-1(x)=A1(x)+A2(conj x); G_-2(p)=A3(p)-delta(p).
template <class S>
LieElement<S> lie_G(int k, const Octonion<S>& arg) {
  switch (k) {
    case 1:
      return lie_A(0, arg) + lie_A(1, -oct_conj(arg));
    case -1:
      return lie_A(0, arg) + lie_A(1, oct_conj(arg));
    case 2:
      if (!oct_is_imaginary(arg)) throw NotImaginary();
      return lie_A(2, -arg) - lie_delta(arg);
    case -2:
      if (!oct_is_imaginary(arg)) throw NotImaginary();
      return lie_A(2, arg) - lie_delta(arg);
    default:
      throw DomainError("lie_G: k must be one of {1,2,-1,-2}");
  }
}

// Re-decompose a 27x27 matrix into (D; a1,a2,a3) coordinates, failing loudly
// if it leaves the 52-dimensional span.
template <class S>
LieElement<S> lie_decompose(const Mat<S>& m) {
  LieElement<S> r;
  r.m = m;
  auto col = [&m](const JordanElement<S>& v) {
    return JordanElement<S>::from_vec(m.apply(v.to_vec()));
  };
  // phi E_1 = F2(a2) + F3(-a3), phi E_2 = F3(a3) + F1(-a1), phi E_3 = F1(a1) + F2(-a2)
  const JordanElement<S> e1 = col(JordanElement<S>::Ei(0));
  const JordanElement<S> e2 = col(JordanElement<S>::Ei(1));
  const JordanElement<S> e3 = col(JordanElement<S>::Ei(2));
  r.a[0] = e3.x[0];
  r.a[1] = e1.x[1];
  r.a[2] = e2.x[2];
  Mat<S> rest = m - (lie_A_matrix(0, r.a[0]) + lie_A_matrix(1, r.a[1]) + lie_A_matrix(2, r.a[2]));
  // the remainder must be block-diagonal with skew 8x8 blocks and zero
  // elsewhere (the d4 part)
  for (int blk = 0; blk < 3; ++blk)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        r.D[static_cast<std::size_t>(blk)](i, j) = rest(3 + 8 * blk + i, 3 + 8 * blk + j);
  const Mat<S> rebuilt = dphi0_matrix(r.D[0], r.D[1], r.D[2]);
  if (!(rest - rebuilt).is_zero()) throw DecompositionFailed();
  for (int blk = 0; blk < 3; ++blk)
    if (!(r.D[static_cast<std::size_t>(blk)] + r.D[static_cast<std::size_t>(blk)].transpose())
             .is_zero())
      throw DecompositionFailed("d4 block not skew");
  return r;
}

template <class S>
LieElement<S> bracket(const LieElement<S>& f, const LieElement<S>& g) {
  return lie_decompose<S>(f.m * g.m - g.m * f.m);
}

// Killing form B(phi1, phi2) = 3 tr(phi1 phi2) on realized matrices.
template <class S>
S killing(const LieElement<S>& f, const LieElement<S>& g) {
  return S(3) * (f.m * g.m).trace();
}

// sigma~ = conjugation by sigma_i on the Lie algebra.
template <class S>
LieElement<S> sigma_twist(int i, const LieElement<S>& f);

// The 28-element d4 basis built by completing the elementary skew matrices.
inline const std::vector<LieElement<Rational>>& d4_basis() {
  static const std::vector<LieElement<Rational>> basis = [] {
    std::vector<LieElement<Rational>> out;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        Mat<Rational> D1(8, 8);
        D1(i, j) = 1;
        D1(j, i) = -1;
        auto [D2, D3] = triality_complete(D1);
        out.push_back(lie_dphi0(D1, D2, D3));
      }
    return out;
  }();
  return basis;
}

// ---------------------------------------------------------------------------
// Group element atoms and operators
// ---------------------------------------------------------------------------

template <class S>
struct AtomPhi0 {
  TrialityTriple<S> t;
};
template <class S>
struct AtomExpRot {  // exp(t A~_1^1(a)) with (c,s) = (cos t, sin t)
  Octonion<S> a;
  S c, s;
};
template <class S>
struct AtomExpBoost {  // exp(t A~_i^1(a)), i in {2,3} (stored 0-indexed 1|2)
  int i;
  Octonion<S> a;
  S ch, sh;
};
struct AtomSigma {
  int i;  // 0-indexed
};
template <class S>
struct AtomExpG {  // exp(G_k(arg)), k in {1,2,-1,-2}
  int k;
  Octonion<S> arg;
};

template <class S>
using Atom = std::variant<AtomPhi0<S>, AtomExpRot<S>, AtomExpBoost<S>, AtomSigma, AtomExpG<S>>;

template <class S>
using GeneratorWord = std::vector<Atom<S>>;

// Unified closed form of exp(t A~_i^1(a)) on h^1 coordinates;
// C,S2... are (cos t, sin t) for i=0 and (cosh t, sinh t) for i in {1,2}.
template <class S>
JordanElement<S> exp_gen_apply(int i, const Octonion<S>& a, const S& C, const S& Sv, bool hyp,
                               const JordanElement<S>& X) {
  const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
  const S C2 = hyp ? C * C + Sv * Sv : C * C - Sv * Sv;
  const S S2 = S(2) * C * Sv;
  const S half = S(1) / S(2);
  const S ax = oct_inner(a, X.x[static_cast<std::size_t>(i)]);
  const S mix = (hyp ? S(-1) : S(1)) * ax * S2;
  JordanElement<S> r;
  r.xi[static_cast<std::size_t>(i)] = X.xi[static_cast<std::size_t>(i)];
  const S sum = X.xi[static_cast<std::size_t>(i1)] + X.xi[static_cast<std::size_t>(i2)];
  const S dif = X.xi[static_cast<std::size_t>(i1)] - X.xi[static_cast<std::size_t>(i2)];
  r.xi[static_cast<std::size_t>(i1)] = half * (sum + dif * C2) + mix;
  r.xi[static_cast<std::size_t>(i2)] = half * (sum - dif * C2) - mix;
  r.x[static_cast<std::size_t>(i)] = X.x[static_cast<std::size_t>(i)] - (half * dif * S2) * a -
                                     ((hyp ? S(-2) : S(2)) * ax * Sv * Sv) * a;
  {
    Octonion<S> w = oct_conj(X.x[static_cast<std::size_t>(i2)] * a);
    r.x[static_cast<std::size_t>(i1)] =
        C * X.x[static_cast<std::size_t>(i1)] + (eps0(i1) > 0 ? Sv : -Sv) * w;
  }
  {
    Octonion<S> w = oct_conj(a * X.x[static_cast<std::size_t>(i1)]);
    r.x[static_cast<std::size_t>(i2)] =
        C * X.x[static_cast<std::size_t>(i2)] - (eps0(i2) > 0 ? Sv : -Sv) * w;
  }
  return r;
}

template <class S>
Mat<S> materialize(const std::function<JordanElement<S>(const JordanElement<S>&)>& f) {
  Mat<S> m(27, 27);
  for (int k = 0; k < 27; ++k) {
    const JordanElement<S> out = f(JordanElement<S>::basis(k));
    for (int r = 0; r < 27; ++r) m(r, k) = out.coord(r);
  }
  return m;
}

template <class S>
Mat<S> atom_matrix(const Atom<S>& atom) {
  return std::visit(
      [](const auto& a) -> Mat<S> {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AtomPhi0<S>>) {
          Mat<S> m(27, 27);
          for (int i = 0; i < 3; ++i) m(i, i) = S(1);
          const Mat<S>* gs[3] = {&a.t.g1, &a.t.g2, &a.t.g3};
          for (int blk = 0; blk < 3; ++blk)
            for (int i = 0; i < 8; ++i)
              for (int j = 0; j < 8; ++j) m(3 + 8 * blk + i, 3 + 8 * blk + j) = (*gs[blk])(i, j);
          return m;
        } else if constexpr (std::is_same_v<T, AtomExpRot<S>>) {
          return materialize<S>([&a](const JordanElement<S>& X) {
            return exp_gen_apply<S>(0, a.a, a.c, a.s, false, X);
          });
        } else if constexpr (std::is_same_v<T, AtomExpBoost<S>>) {
          return materialize<S>([&a](const JordanElement<S>& X) {
            return exp_gen_apply<S>(a.i, a.a, a.ch, a.sh, true, X);
          });
        } else if constexpr (std::is_same_v<T, AtomSigma>) {
          Mat<S> m = Mat<S>::identity(27);
          for (int blk = 0; blk < 3; ++blk)
            if (blk != a.i)
              for (int r = 0; r < 8; ++r) m(3 + 8 * blk + r, 3 + 8 * blk + r) = S(-1);
          return m;
        } else {
          // AtomExpG: finite exponential sum of the nilpotent G_k
          const LieElement<S> g = lie_G<S>(a.k, a.arg);
          Mat<S> sum = Mat<S>::identity(27);
          Mat<S> pow = Mat<S>::identity(27);
          for (int n = 1; n <= 8; ++n) {
            pow = (S(1) / S(n)) * (pow * g.m);
            if (pow.is_zero()) break;
            sum = sum + pow;
          }
          return sum;
        }
      },
      atom);
}

template <class S>
Atom<S> atom_inverse(const Atom<S>& atom) {
  return std::visit(
      [](const auto& a) -> Atom<S> {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AtomPhi0<S>>) {
          return AtomPhi0<S>{a.t.inverse()};
        } else if constexpr (std::is_same_v<T, AtomExpRot<S>>) {
          return AtomExpRot<S>{a.a, a.c, -a.s};
        } else if constexpr (std::is_same_v<T, AtomExpBoost<S>>) {
          return AtomExpBoost<S>{a.i, a.a, a.ch, -a.sh};
        } else if constexpr (std::is_same_v<T, AtomSigma>) {
          return a;
        } else {
          return AtomExpG<S>{a.k, -a.arg};
        }
      },
      atom);
}

template <class S>
struct F4Operator {
  Mat<S> m{27, 27};
  GeneratorWord<S> word;  // atoms in order of application (first applied first)
  bool verified = false;

  static F4Operator identity() {
    F4Operator g;
    g.m = Mat<S>::identity(27);
    return g;
  }
  JordanElement<S> apply(const JordanElement<S>& X) const {
    return JordanElement<S>::from_vec(m.apply(X.to_vec()));
  }
};

template <class S>
F4Operator<S> op_from_atom(Atom<S> atom) {
  F4Operator<S> g;
  g.m = atom_matrix(atom);
  g.word = {std::move(atom)};
  return g;
}

// phi0(g1,g2,g3): fixes E1,E2,E3, block-diagonal g_i on the F_i^1 slots.
template <class S>
F4Operator<S> phi0(const TrialityTriple<S>& t) {
  if (!t.is_triality()) throw NotTriality();
  return op_from_atom<S>(AtomPhi0<S>{t});
}

template <class S>
F4Operator<S> exp_rot(const Octonion<S>& a, const S& c, const S& s) {
  if (!oct_is_unit(a)) throw NotUnit();
  if (!scalar_ops<S>::is_zero(c * c + s * s - S(1))) throw NotOnCircle();
  return op_from_atom<S>(AtomExpRot<S>{a, c, s});
}

// i is the 1-indexed slot in {2,3}; stored 0-indexed.
template <class S>
F4Operator<S> exp_boost(int i, const Octonion<S>& a, const S& ch, const S& sh) {
  if (i != 1 && i != 2) throw DomainError("exp_boost: slot must be 2 or 3");
  if (!oct_is_unit(a)) throw NotUnit();
  if (!scalar_ops<S>::is_zero(ch * ch - sh * sh - S(1)) || !(to_double(ch) > 0))
    throw NotOnHyperbola();
  return op_from_atom<S>(AtomExpBoost<S>{i, a, ch, sh});
}

template <class S>
F4Operator<S> sigma_op(int i) {
  return op_from_atom<S>(Atom<S>{AtomSigma{i}});
}

template <class S>
F4Operator<S> exp_g(int k, const Octonion<S>& arg) {
  if ((k == 2 || k == -2) && !oct_is_imaginary(arg)) throw NotImaginary();
  if (k != 1 && k != 2 && k != -1 && k != -2) throw DomainError("exp_g: bad k");
  return op_from_atom<S>(Atom<S>{AtomExpG<S>{k, arg}});
}

// exp of a nilpotent Lie element as a finite sum; refuses non-nilpotent input.
template <class S>
F4Operator<S> exp_nilpotent(const LieElement<S>& g) {
  Mat<S> sum = Mat<S>::identity(27);
  Mat<S> pow = Mat<S>::identity(27);
  bool vanished = false;
  for (int n = 1; n <= 27; ++n) {
    pow = (S(1) / S(n)) * (pow * g.m);
    if (pow.is_zero()) {
      vanished = true;
      break;
    }
    sum = sum + pow;
  }
  if (!vanished) throw NotNilpotent();
  F4Operator<S> out;
  out.m = sum;
  // recover a word when g is a recognized n^+ / n^- element:
  // g = G_2(p) + G_1(x) has a-parts (x, -conj x, -p) and D = -delta(p).
  const Octonion<S> x = g.a[0];
  for (int sgn : {1, -1}) {
    const Octonion<S> expected1 = sgn > 0 ? -oct_conj(x) : oct_conj(x);
    if (!oct_is_zero(g.a[1] - expected1)) continue;
    const Octonion<S> p = sgn > 0 ? -g.a[2] : g.a[2];
    if (!oct_is_imaginary(p)) continue;
    const LieElement<S> probe = lie_G<S>(2 * sgn, p) + lie_G<S>(sgn, x);
    if ((probe.m - g.m).is_zero()) {
      if (!oct_is_zero(p)) out.word.push_back(AtomExpG<S>{2 * sgn, p});
      if (!oct_is_zero(x)) out.word.push_back(AtomExpG<S>{sgn, x});
      break;
    }
  }
  return out;
}

// compose(g,h): apply h first, then g.
template <class S>
F4Operator<S> compose(const F4Operator<S>& g, const F4Operator<S>& h) {
  F4Operator<S> out;
  out.m = g.m * h.m;
  out.word = h.word;
  out.word.insert(out.word.end(), g.word.begin(), g.word.end());
  return out;
}

template <class S>
JordanElement<S> apply(const F4Operator<S>& g, const JordanElement<S>& X) {
  return g.apply(X);
}

template <class S>
F4Operator<S> inverse(const F4Operator<S>& g) {
  F4Operator<S> out;
  if (!g.word.empty()) {
    out.word.reserve(g.word.size());
    for (auto it = g.word.rbegin(); it != g.word.rend(); ++it)
      out.word.push_back(atom_inverse(*it));
    out.m = Mat<S>::identity(27);
    for (auto it = out.word.rbegin(); it != out.word.rend(); ++it)
      out.m = out.m * atom_matrix(*it);
    return out;
  }
  auto inv = mat_inverse(g.m);
  if (!inv) throw SingularSystem("operator matrix not invertible");
  out.m = *inv;
  return out;
}

struct VerifyReport {
  bool ok = true;
  int bi = -1, bj = -1;      // first violated basis pair
  double residual = 0;       // max-abs residual found
};

// g is an automorphism iff g(X x Y) = gX x gY; checked on all
// 27*28/2 basis pairs plus gE = E. Exact on the exact backend; on the float
// backend the tolerance scales with the squared entry magnitude, which is the
// roundoff envelope of the quadratic cross-product residual.
// cond_scale, when positive, overrides the conditioning estimate (float
// backend only): useful when the matrix is a product whose intermediate
// factors were larger than the result.
template <class S>
VerifyReport verify_automorphism(F4Operator<S>& g, double cond_scale = 0) {
  VerifyReport rep;
  double tol = 0;
  if constexpr (!scalar_ops<S>::exact) {
    const double scale = std::max(1.0, g.m.max_abs_double());
    // default: roundoff envelope of the verification arithmetic itself;
    // cond_scale already bounds error/eps for a composed word
    tol = scalar_ops<double>::tol * std::max(cond_scale, scale * scale);
  }
  auto nonzero = [&tol](const JordanElement<S>& d) {
    if constexpr (scalar_ops<S>::exact)
      return !(d == JordanElement<S>::zero());
    else
      return jmax_abs(d) > tol;
  };
  const JordanElement<S> E = JordanElement<S>::unitE();
  {
    const JordanElement<S> d = g.apply(E) - E;
    if (nonzero(d)) {
      rep.ok = false;
      rep.residual = jmax_abs(d);
      g.verified = false;
      return rep;
    }
  }
  std::vector<JordanElement<S>> cols;
  cols.reserve(27);
  for (int k = 0; k < 27; ++k) {
    JordanElement<S> c;
    for (int r = 0; r < 27; ++r) c.set_coord(r, g.m(r, k));
    cols.push_back(std::move(c));
  }
  for (int i = 0; i < 27; ++i)
    for (int j = i; j < 27; ++j) {
      const JordanElement<S> lhs =
          g.apply(cross(JordanElement<S>::basis(i), JordanElement<S>::basis(j)));
      const JordanElement<S> rhs = cross(cols[static_cast<std::size_t>(i)],
                                         cols[static_cast<std::size_t>(j)]);
      const JordanElement<S> d = lhs - rhs;
      if (nonzero(d)) {
        rep.ok = false;
        rep.bi = i;
        rep.bj = j;
        rep.residual = jmax_abs(d);
        g.verified = false;
        return rep;
      }
    }
  g.verified = true;
  return rep;
}

template <class S>
LieElement<S> sigma_twist(int i, const LieElement<S>& f) {
  const Mat<S> s = atom_matrix(Atom<S>{AtomSigma{i}});
  return lie_decompose<S>((s * f.m) * s);
}

// Convert operators and atoms between scalar backends (exact -> double).
inline Octonion<double> to_float(const Octonion<Rational>& o) {
  Octonion<double> r;
  for (int i = 0; i < 8; ++i) r[i] = to_double(o[i]);
  return r;
}
inline JordanElement<double> to_float(const JordanElement<Rational>& X) {
  JordanElement<double> r;
  for (int k = 0; k < 27; ++k) r.set_coord(k, to_double(X.coord(k)));
  return r;
}
inline Mat<double> to_float(const Mat<Rational>& m) {
  Mat<double> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = to_double(m(i, j));
  return r;
}
inline TrialityTriple<double> to_float(const TrialityTriple<Rational>& t) {
  return {to_float(t.g1), to_float(t.g2), to_float(t.g3)};
}
inline Atom<double> to_float(const Atom<Rational>& a) {
  return std::visit(
      [](const auto& v) -> Atom<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AtomPhi0<Rational>>)
          return AtomPhi0<double>{to_float(v.t)};
        else if constexpr (std::is_same_v<T, AtomExpRot<Rational>>)
          return AtomExpRot<double>{to_float(v.a), to_double(v.c), to_double(v.s)};
        else if constexpr (std::is_same_v<T, AtomExpBoost<Rational>>)
          return AtomExpBoost<double>{v.i, to_float(v.a), to_double(v.ch), to_double(v.sh)};
        else if constexpr (std::is_same_v<T, AtomSigma>)
          return v;
        else
          return AtomExpG<double>{v.k, to_float(v.arg)};
      },
      a);
}
inline F4Operator<double> to_float(const F4Operator<Rational>& g) {
  F4Operator<double> r;
  r.m = to_float(g.m);
  r.verified = g.verified;
  for (const auto& a : g.word) r.word.push_back(to_float(a));
  return r;
}

}  // namespace albert
