#pragma once

#include <array>
#include <cstddef>

#include "albert/scalar.hpp"

namespace albert {

// Multiplication table on the basis e0=1, e1..e7, generated from the seven
// oriented triples (l,m,n): e_l e_m = e_n, e_m e_n = e_l, e_n e_l = e_m.
struct OctTable {
  std::array<std::array<int, 8>, 8> idx{};
  std::array<std::array<int, 8>, 8> sgn{};
};

consteval OctTable make_oct_table() {
  constexpr int triples[7][3] = {{1, 2, 3}, {3, 5, 6}, {6, 7, 1}, {1, 4, 5},
                                 {3, 4, 7}, {6, 4, 2}, {2, 5, 7}};
  OctTable t{};
  for (int i = 0; i < 8; ++i) {
    t.idx[0][i] = t.idx[i][0] = i;
    t.sgn[0][i] = t.sgn[i][0] = 1;
  }
  for (int i = 1; i < 8; ++i) {
    t.idx[i][i] = 0;
    t.sgn[i][i] = -1;
  }
  for (auto& tr : triples) {
    const int l = tr[0], m = tr[1], n = tr[2];
    const int cyc[3][3] = {{l, m, n}, {m, n, l}, {n, l, m}};
    for (auto& c : cyc) {
      t.idx[c[0]][c[1]] = c[2];
      t.sgn[c[0]][c[1]] = 1;
      t.idx[c[1]][c[0]] = c[2];
      t.sgn[c[1]][c[0]] = -1;
    }
  }
  return t;
}

inline constexpr OctTable kOctTable = make_oct_table();

template <class S>
struct Octonion {
  std::array<S, 8> c{};

  Octonion() {
    for (auto& v : c) v = S(0);
  }
  static Octonion zero() { return Octonion(); }
  static Octonion one() { return unit(0); }
  static Octonion unit(int i) {
    Octonion r;
    r.c[static_cast<std::size_t>(i)] = S(1);
    return r;
  }
  static Octonion scalar(const S& v) {
    Octonion r;
    r.c[0] = v;
    return r;
  }

  const S& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  S& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend Octonion operator*(const S& v, const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = v * a.c[i];
    return r;
  }
  friend Octonion operator*(const Octonion& a, const S& v) { return v * a; }
  friend Octonion operator*(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) {
      if (scalar_ops<S>::exact && a.c[i] == S(0)) continue;
      for (int j = 0; j < 8; ++j) {
        const S term = a.c[i] * b.c[j];
        if (kOctTable.sgn[i][j] > 0)
          r.c[kOctTable.idx[i][j]] += term;
        else
          r.c[kOctTable.idx[i][j]] -= term;
      }
    }
    return r;
  }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
};

template <class S>
Octonion<S> oct_conj(const Octonion<S>& x) {
  Octonion<S> r = x;
  for (int i = 1; i < 8; ++i) r.c[i] = -r.c[i];
  return r;
}

template <class S>
S oct_re(const Octonion<S>& x) {
  return x.c[0];
}

template <class S>
Octonion<S> oct_im(const Octonion<S>& x) {
  Octonion<S> r = x;
  r.c[0] = S(0);
  return r;
}

template <class S>
S oct_inner(const Octonion<S>& x, const Octonion<S>& y) {
  S r(0);
  for (int i = 0; i < 8; ++i) r += x.c[i] * y.c[i];
  return r;
}

template <class S>
S oct_norm(const Octonion<S>& x) {
  return oct_inner(x, x);
}

template <class S>
bool oct_is_zero(const Octonion<S>& x) {
  for (int i = 0; i < 8; ++i)
    if (!scalar_ops<S>::is_zero(x.c[i])) return false;
  return true;
}

template <class S>
bool oct_is_imaginary(const Octonion<S>& x) {
  return scalar_ops<S>::is_zero(x.c[0]);
}

template <class S>
bool oct_is_unit(const Octonion<S>& x) {
  return scalar_ops<S>::is_zero(oct_norm(x) - S(1));
}

// T(x,y,z) = (x ybar) z - (z ybar) x; alternating on O.
template <class S>
Octonion<S> oct_T(const Octonion<S>& x, const Octonion<S>& y, const Octonion<S>& z) {
  const Octonion<S> yb = oct_conj(y);
  return (x * yb) * z - (z * yb) * x;
}

}  // namespace albert
