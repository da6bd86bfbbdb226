#pragma once

#include <array>
#include <vector>

#include "albert/linalg.hpp"
#include "albert/octonion.hpp"
#include "albert/realroots.hpp"

namespace albert {

// eps(i) = eps_1(i): +1 for i=1, -1 otherwise (1-indexed slots; we store
// 0-indexed so eps0(0)=+1).
inline constexpr int eps0(int i) { return i == 0 ? 1 : -1; }

// h^1(xi; x): 3 diagonal scalars + 3 off-diagonal octonions; the flat
// 27-vector order is [xi1, xi2, xi3, x1(0..7), x2(0..7), x3(0..7)].
template <class S>
struct JordanElement {
  std::array<S, 3> xi{};
  std::array<Octonion<S>, 3> x{};

  JordanElement() {
    for (auto& v : xi) v = S(0);
  }

  static JordanElement zero() { return {}; }
  static JordanElement unitE() {
    JordanElement r;
    r.xi = {S(1), S(1), S(1)};
    return r;
  }
  static JordanElement Ei(int i) {
    JordanElement r;
    r.xi[static_cast<std::size_t>(i)] = S(1);
    return r;
  }
  static JordanElement Fi1(int i, const Octonion<S>& v) {
    JordanElement r;
    r.x[static_cast<std::size_t>(i)] = v;
    return r;
  }
  static JordanElement diag(const S& a, const S& b, const S& c) {
    JordanElement r;
    r.xi = {a, b, c};
    return r;
  }
  // P+- = h^1(+-1, -+1, 0; 0,0,1)
  static JordanElement Pplus() {
    JordanElement r = Fi1(2, Octonion<S>::one());
    r.xi[0] = S(1);
    r.xi[1] = S(-1);
    return r;
  }
  static JordanElement Pminus() {
    JordanElement r = Fi1(2, Octonion<S>::one());
    r.xi[0] = S(-1);
    r.xi[1] = S(1);
    return r;
  }
  // Q+-(v) = h^1(0,0,0; v, +-conj(v), 0)
  static JordanElement Qplus(const Octonion<S>& v) {
    JordanElement r;
    r.x[0] = v;
    r.x[1] = oct_conj(v);
    return r;
  }
  static JordanElement Qminus(const Octonion<S>& v) {
    JordanElement r;
    r.x[0] = v;
    r.x[1] = -oct_conj(v);
    return r;
  }

  S coord(int k) const {
    if (k < 3) return xi[static_cast<std::size_t>(k)];
    return x[static_cast<std::size_t>((k - 3) / 8)][(k - 3) % 8];
  }
  void set_coord(int k, const S& v) {
    if (k < 3)
      xi[static_cast<std::size_t>(k)] = v;
    else
      x[static_cast<std::size_t>((k - 3) / 8)][(k - 3) % 8] = v;
  }
  std::vector<S> to_vec() const {
    std::vector<S> v(27);
    for (int k = 0; k < 27; ++k) v[static_cast<std::size_t>(k)] = coord(k);
    return v;
  }
  static JordanElement from_vec(const std::vector<S>& v) {
    JordanElement r;
    for (int k = 0; k < 27; ++k) r.set_coord(k, v[static_cast<std::size_t>(k)]);
    return r;
  }
  static JordanElement basis(int k) {
    JordanElement r;
    r.set_coord(k, S(1));
    return r;
  }

  friend JordanElement operator+(const JordanElement& a, const JordanElement& b) {
    JordanElement r;
    for (int i = 0; i < 3; ++i) {
      r.xi[i] = a.xi[i] + b.xi[i];
      r.x[i] = a.x[i] + b.x[i];
    }
    return r;
  }
  friend JordanElement operator-(const JordanElement& a, const JordanElement& b) {
    JordanElement r;
    for (int i = 0; i < 3; ++i) {
      r.xi[i] = a.xi[i] - b.xi[i];
      r.x[i] = a.x[i] - b.x[i];
    }
    return r;
  }
  friend JordanElement operator-(const JordanElement& a) {
    JordanElement r;
    for (int i = 0; i < 3; ++i) {
      r.xi[i] = -a.xi[i];
      r.x[i] = -a.x[i];
    }
    return r;
  }
  friend JordanElement operator*(const S& v, const JordanElement& a) {
    JordanElement r;
    for (int i = 0; i < 3; ++i) {
      r.xi[i] = v * a.xi[i];
      r.x[i] = v * a.x[i];
    }
    return r;
  }
  friend bool operator==(const JordanElement& a, const JordanElement& b) {
    return a.xi == b.xi && a.x == b.x;
  }
};

template <class S>
bool jis_zero(const JordanElement<S>& a) {
  for (int i = 0; i < 3; ++i) {
    if (!scalar_ops<S>::is_zero(a.xi[static_cast<std::size_t>(i)])) return false;
    if (!oct_is_zero(a.x[static_cast<std::size_t>(i)])) return false;
  }
  return true;
}

template <class S>
double jmax_abs(const JordanElement<S>& a) {
  double m = 0;
  for (int k = 0; k < 27; ++k) m = std::max(m, std::fabs(to_double(a.coord(k))));
  return m;
}

template <class S>
S trace(const JordanElement<S>& a) {
  return a.xi[0] + a.xi[1] + a.xi[2];
}

// (X|Y) = sum_i xi_i eta_i + eps(i) 2 (x_i|y_i)
template <class S>
S inner(const JordanElement<S>& a, const JordanElement<S>& b) {
  S r(0);
  for (int i = 0; i < 3; ++i) {
    r += a.xi[static_cast<std::size_t>(i)] * b.xi[static_cast<std::size_t>(i)];
    const S ip = oct_inner(a.x[static_cast<std::size_t>(i)], b.x[static_cast<std::size_t>(i)]);
    r += eps0(i) > 0 ? S(2) * ip : S(-2) * ip;
  }
  return r;
}

// Jordan product on (xi; x) coordinates, equal to the symmetrized matrix
// product in M(3, O^C) restricted to h^1 elements.
template <class S>
JordanElement<S> jmul(const JordanElement<S>& a, const JordanElement<S>& b) {
  JordanElement<S> r;
  const S half = S(1) / S(2);
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    S d = a.xi[i] * b.xi[i];
    const S t1 = oct_inner(a.x[i1], b.x[i1]);
    const S t2 = oct_inner(a.x[i2], b.x[i2]);
    d += (eps0(i1) > 0 ? t1 : -t1);
    d += (eps0(i2) > 0 ? t2 : -t2);
    r.xi[i] = d;
    Octonion<S> v = (a.xi[i1] + a.xi[i2]) * b.x[i] + (b.xi[i1] + b.xi[i2]) * a.x[i];
    Octonion<S> w = oct_conj(a.x[i1] * b.x[i2]) + oct_conj(b.x[i1] * a.x[i2]);
    r.x[i] = half * (eps0(i) > 0 ? v - w : v + w);
  }
  return r;
}

// Freudenthal cross product on coordinates.
template <class S>
JordanElement<S> cross(const JordanElement<S>& a, const JordanElement<S>& b) {
  JordanElement<S> r;
  const S half = S(1) / S(2);
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    const S ip = oct_inner(a.x[i], b.x[i]);
    r.xi[i] = half * (a.xi[i1] * b.xi[i2] + b.xi[i1] * a.xi[i2]) - (eps0(i) > 0 ? ip : -ip);
    Octonion<S> w = oct_conj(a.x[i1] * b.x[i2]) + oct_conj(b.x[i1] * a.x[i2]);
    Octonion<S> v = a.xi[i] * b.x[i] + b.xi[i] * a.x[i];
    r.x[i] = half * ((eps0(i) > 0 ? -w : w) - v);
  }
  return r;
}

template <class S>
JordanElement<S> sharp(const JordanElement<S>& a) {
  return cross(a, a);
}

template <class S>
S trilinear(const JordanElement<S>& a, const JordanElement<S>& b, const JordanElement<S>& c) {
  return inner(a, cross(b, c));
}

// det(X) = xi1 xi2 xi3 - 2 Re(x1 x2 x3) - sum eps(i) xi_i (x_i|x_i).
// Note the minus sign on the Re term: the complex-coordinate determinant
// formula picks up (sqrt
// -1)^2 = -1 from the F_2^1, F_3^1 slots of h^1.
template <class S>
S det(const JordanElement<S>& a) {
  S r = a.xi[0] * a.xi[1] * a.xi[2];
  r -= S(2) * oct_re((a.x[0] * a.x[1]) * a.x[2]);
  for (int i = 0; i < 3; ++i) {
    const S n = a.xi[static_cast<std::size_t>(i)] * oct_norm(a.x[static_cast<std::size_t>(i)]);
    r -= (eps0(i) > 0 ? n : -n);
  }
  return r;
}

template <class S>
CubicPoly<S> charpoly(const JordanElement<S>& a) {
  return CubicPoly<S>{trace(a), trace(sharp(a)), det(a)};
}

// Q(X) = -tr(X^{x2})
template <class S>
S q_form(const JordanElement<S>& a) {
  return -trace(sharp(a));
}

template <class S>
JordanElement<S> p_traceless(const JordanElement<S>& a) {
  return a - (trace(a) / S(3)) * JordanElement<S>::unitE();
}

// E_{X,lambda} = tr((lambda E - X)^{x2})^{-1} (lambda E - X)^{x2}
template <class S>
JordanElement<S> e_lambda(const JordanElement<S>& a, const S& lambda) {
  const JordanElement<S> z = lambda * JordanElement<S>::unitE() - a;
  const JordanElement<S> z2 = sharp(z);
  const S t = trace(z2);
  if (scalar_ops<S>::is_zero(t)) throw DegenerateLambda();
  return (S(1) / t) * z2;
}

template <class S>
JordanElement<S> w_lambda(const JordanElement<S>& a, const S& lambda) {
  const JordanElement<S> e = e_lambda(a, lambda);
  const S mu = (trace(a) - lambda) / S(2);
  return a - (lambda * e + mu * (JordanElement<S>::unitE() - e));
}

// The minimal subspace V_X = span{X^{x2}, X, E}; returned as the spanning
// set plus its exact rank. The span is closed under the cross product.
template <class S>
std::pair<std::array<JordanElement<S>, 3>, int> v_x_basis(const JordanElement<S>& X) {
  std::array<JordanElement<S>, 3> span{sharp(X), X, JordanElement<S>::unitE()};
  Mat<S> m(27, 3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 27; ++k) m(k, j) = span[static_cast<std::size_t>(j)].coord(k);
  return {span, mat_rank(m)};
}

struct Signature {
  int neg = 0, pos = 0, null = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.neg == b.neg && a.pos == b.pos && a.null == b.null;
  }
};

// Exact signature of B_Y(X1,X2) = (Y|X1|X2) on the 27-dim space via symmetric
// congruence reduction over the rationals.
inline Signature b_signature(const JordanElement<Rational>& Y) {
  Mat<Rational> G(27, 27);
  for (int a = 0; a < 27; ++a)
    for (int b = a; b < 27; ++b) {
      const Rational v =
          trilinear(Y, JordanElement<Rational>::basis(a), JordanElement<Rational>::basis(b));
      G(a, b) = v;
      G(b, a) = v;
    }
  Signature sig;
  for (int k = 0; k < 27; ++k) {
    if (G(k, k) == 0) {
      int swp = -1, mix = -1;
      for (int j = k + 1; j < 27; ++j) {
        if (G(j, j) != 0 && swp < 0) swp = j;
        if (G(k, j) != 0 && mix < 0) mix = j;
      }
      if (swp >= 0) {
        for (int c = 0; c < 27; ++c) std::swap(G(k, c), G(swp, c));
        for (int r = 0; r < 27; ++r) std::swap(G(r, k), G(r, swp));
      } else if (mix >= 0) {
        for (int c = 0; c < 27; ++c) G(k, c) += G(mix, c);
        for (int r = 0; r < 27; ++r) G(r, k) += G(r, mix);
      } else {
        ++sig.null;
        continue;
      }
    }
    if (G(k, k) == 0) {
      ++sig.null;
      continue;
    }
    (G(k, k) > 0 ? sig.pos : sig.neg) += 1;
    for (int i = k + 1; i < 27; ++i) {
      if (G(i, k) == 0) continue;
      const Rational f = G(i, k) / G(k, k);
      for (int c = 0; c < 27; ++c) G(i, c) -= f * G(k, c);
      for (int r = 0; r < 27; ++r) G(r, i) -= f * G(r, k);
    }
  }
  return sig;
}

enum class MembershipClass { H_O, Hprime_O, N1plus, N1minus, N2, Zero, None };

inline const char* to_string(MembershipClass m) {
  switch (m) {
    case MembershipClass::H_O: return "H_O";
    case MembershipClass::Hprime_O: return "Hprime_O";
    case MembershipClass::N1plus: return "N1plus";
    case MembershipClass::N1minus: return "N1minus";
    case MembershipClass::N2: return "N2";
    case MembershipClass::Zero: return "Zero";
    case MembershipClass::None: return "None";
  }
  return "?";
}

// Stratum membership from the defining invariants (exact backend).
inline MembershipClass membership(const JordanElement<Rational>& X) {
  if (jis_zero(X)) return MembershipClass::Zero;
  const JordanElement<Rational> s = sharp(X);
  const Rational tr = trace(X);
  const Rational e1 = inner(X, JordanElement<Rational>::Ei(0));
  if (jis_zero(s)) {
    if (tr == 1) {
      if (e1 >= 1) return MembershipClass::H_O;
      if (e1 <= 0) return MembershipClass::Hprime_O;
      return MembershipClass::None;
    }
    if (tr == 0) {
      if (e1 > 0) return MembershipClass::N1plus;
      if (e1 < 0) return MembershipClass::N1minus;
      return MembershipClass::None;
    }
    return MembershipClass::None;
  }
  if (tr == 0 && trace(s) == 0 && det(X) == 0) return MembershipClass::N2;
  return MembershipClass::None;
}

}  // namespace albert
