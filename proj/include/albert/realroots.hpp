#pragma once

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "albert/scalar.hpp"

namespace albert {

// Monic cubic lambda^3 - t lambda^2 + s lambda - d (characteristic-polynomial shape).
template <class S>
struct CubicPoly {
  S t{0}, s{0}, d{0};

  S eval(const S& x) const { return ((x - t) * x + s) * x - d; }
  S deriv(const S& x) const { return (S(3) * x - S(2) * t) * x + s; }
  friend bool operator==(const CubicPoly& a, const CubicPoly& b) {
    return a.t == b.t && a.s == b.s && a.d == b.d;
  }
};

using Poly = std::vector<Rational>;  // coefficients, low degree first

inline int poly_deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}
inline Poly poly_trim(Poly p) {
  p.resize(static_cast<std::size_t>(poly_deg(p) + 1));
  return p;
}
inline Rational poly_eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * x + p[static_cast<std::size_t>(i)];
  return r;
}
inline Poly poly_deriv(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly q(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) q[i - 1] = Rational(static_cast<long>(i)) * p[i];
  return q;
}
inline Poly poly_neg_rem(Poly a, const Poly& b) {
  // remainder of a by b, negated (Sturm step); b nonzero
  const int db = poly_deg(b);
  while (poly_deg(a) >= db && poly_deg(a) >= 0) {
    const int da = poly_deg(a);
    const Rational f = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
    a[static_cast<std::size_t>(da)] = 0;
  }
  for (auto& c : a) c = -c;
  return poly_trim(std::move(a));
}
inline Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (poly_deg(b) >= 0) {
    Poly r = poly_neg_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (poly_deg(a) >= 0) {
    const Rational lead = a[static_cast<std::size_t>(poly_deg(a))];
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(poly_trim(p));
  Poly d = poly_deriv(p);
  if (poly_deg(d) >= 0) chain.push_back(poly_trim(d));
  while (poly_deg(chain.back()) > 0) {
    Poly r = poly_neg_rem(chain[chain.size() - 2], chain.back());
    if (poly_deg(r) < 0) break;
    chain.push_back(std::move(r));
  }
  return chain;
}
inline int sturm_sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = poly_eval(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
// Number of distinct real roots in (a, b].
inline int sturm_count(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

// A real algebraic number: either exactly rational, or an isolating interval
// [lo,hi] for a single root of a square-free defining cubic with
// defining(lo)*defining(hi) < 0.
class AlgebraicReal {
 public:
  AlgebraicReal() : rat_(Rational(0)) {}
  explicit AlgebraicReal(Rational v) : rat_(std::move(v)) {}
  AlgebraicReal(CubicPoly<Rational> defining, Rational lo, Rational hi)
      : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
    tighten_rational_endpoints();
  }

  bool is_rational() const { return rat_.has_value(); }
  const Rational& rational() const { return *rat_; }
  const CubicPoly<Rational>& defining() const { return defining_; }
  const Rational& lo() const { return rat_ ? *rat_ : lo_; }
  const Rational& hi() const { return rat_ ? *rat_ : hi_; }

  void refine() {
    if (rat_) return;
    const Rational mid = (lo_ + hi_) / 2;
    const Rational fm = defining_.eval(mid);
    if (fm == 0) {
      rat_ = mid;
      return;
    }
    if ((defining_.eval(lo_) > 0) == (fm > 0))
      lo_ = mid;
    else
      hi_ = mid;
  }
  void refine_below(const Rational& width) {
    while (!rat_ && hi_ - lo_ > width) refine();
  }
  double approx() const {
    if (rat_) return to_double(*rat_);
    AlgebraicReal copy = *this;
    copy.refine_below(Rational(1) / Rational(BigInt(1) << 60));
    return to_double((copy.lo() + copy.hi()) / 2);
  }

  // Total order; refines both operands as needed (roots assumed distinct
  // unless both rational).
  static int compare(AlgebraicReal a, AlgebraicReal b) {
    if (a.is_rational() && b.is_rational())
      return a.rational() == b.rational() ? 0 : (a.rational() < b.rational() ? -1 : 1);
    for (int iter = 0; iter < 4096; ++iter) {
      if (a.hi() < b.lo()) return -1;
      if (b.hi() < a.lo()) return 1;
      a.refine();
      b.refine();
      if (a.is_rational() && b.is_rational())
        return a.rational() == b.rational() ? 0 : (a.rational() < b.rational() ? -1 : 1);
    }
    throw NoGapViolated("AlgebraicReal::compare failed to separate roots");
  }
  // Equality as numbers, assuming both come from the same square-free cubic
  // (or are rational).
  static bool same_root(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return a.rational() == b.rational();
    if (!(a.defining() == b.defining())) return false;
    return !(a.hi() < b.lo() || b.hi() < a.lo());
  }

 private:
  void tighten_rational_endpoints() {
    // If an endpoint is itself the root, collapse.
    if (defining_.eval(lo_) == 0) {
      rat_ = lo_;
      return;
    }
    if (defining_.eval(hi_) == 0) {
      rat_ = hi_;
      return;
    }
  }
  std::optional<Rational> rat_;
  CubicPoly<Rational> defining_{};
  Rational lo_{0}, hi_{0};
};

struct ThreeDistinctReal {
  std::array<AlgebraicReal, 3> roots;  // descending
};
struct RealPlusComplexPair {
  AlgebraicReal lambda1;    // the unique real root
  AlgebraicReal p;          // (t - lambda1)/2
  AlgebraicReal q_squared;  // (3 lambda1^2 - 2 t lambda1 + 4 s - t^2)/4, q > 0 implied
};
struct DoubleSimple {
  Rational lambda1;  // multiplicity 1
  Rational lambda2;  // multiplicity 2
};
struct TripleRoot {
  Rational lambda;
};
using RootStructure = std::variant<ThreeDistinctReal, RealPlusComplexPair, DoubleSimple, TripleRoot>;

namespace detail {

inline Poly to_poly(const CubicPoly<Rational>& c) { return Poly{-c.d, c.s, -c.t, Rational(1)}; }

// Try small rational roots via the integer rational-root theorem after
// clearing denominators; capped so adversarial inputs just fall back to
// interval roots.
inline std::vector<Rational> rational_roots(const CubicPoly<Rational>& c) {
  std::vector<Rational> out;
  const BigInt L0 = denominator(c.t), L1 = denominator(c.s), L2 = denominator(c.d);
  BigInt L = L0;
  L = L * L1 / boost::multiprecision::gcd(L, L1);
  L = L * L2 / boost::multiprecision::gcd(L, L2);
  // mu = L*lambda is a root of monic integer cubic with constant term d*L^3
  const Rational c0r = c.d * Rational(L) * Rational(L) * Rational(L);
  BigInt c0 = numerator(c0r);
  if (c0 == 0) {
    out.push_back(Rational(0));
    // factor out lambda: remaining quadratic mu^2 - tL mu + s L^2
    const Rational tb = c.t * Rational(L), sb = c.s * Rational(L) * Rational(L);
    const Rational disc = tb * tb - 4 * sb;
    if (auto r = scalar_ops<Rational>::try_sqrt(disc)) {
      out.push_back(((tb + *r) / 2) / Rational(L));
      out.push_back(((tb - *r) / 2) / Rational(L));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (c0 < 0) c0 = -c0;
  if (c0 > BigInt(1) << 48) return out;  // divisor enumeration too costly
  std::vector<BigInt> divs;
  for (BigInt i = 1; i * i <= c0; ++i) {
    if (c0 % i == 0) {
      divs.push_back(i);
      divs.push_back(c0 / i);
    }
    if (divs.size() > 4096) return out;
  }
  const CubicPoly<Rational> scaled{c.t * Rational(L), c.s * Rational(L) * Rational(L),
                                   c.d * Rational(L) * Rational(L) * Rational(L)};
  for (const auto& dv : divs) {
    for (int sgn : {1, -1}) {
      const Rational mu = Rational(dv) * sgn;
      if (scaled.eval(mu) == 0) out.push_back(mu / Rational(L));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Isolating intervals for all real roots of a square-free polynomial.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p) {
  const auto chain = sturm_chain(p);
  Rational bound(1);
  const Rational lead = p[static_cast<std::size_t>(poly_deg(p))];
  for (int i = 0; i < poly_deg(p); ++i) {
    const Rational m = scalar_ops<Rational>::abs(p[static_cast<std::size_t>(i)] / lead);
    if (m > bound - 1) bound = m + 1;
  }
  std::vector<std::pair<Rational, Rational>> out;
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int n = sturm_count(chain, a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    const Rational mid = (a + b) / 2;
    if (poly_eval(p, mid) == 0) {
      // shrink an exact hit into its own bracket, then recurse on the sides
      Rational w = (b - a) / 1024;
      while (sturm_count(chain, mid - w, mid + w) > 1 || poly_eval(p, mid - w) == 0 ||
             poly_eval(p, mid + w) == 0)
        w /= 2;
      out.emplace_back(mid - w, mid + w);
      stack.emplace_back(a, mid - w);
      stack.emplace_back(mid + w, b);
      continue;
    }
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Defining cubic of v = r2*lambda^2 + r1*lambda + r0 as lambda runs over the
// roots of phi: prod (mu - v(lambda_i)), via power sums.
inline CubicPoly<Rational> transformed_cubic(const CubicPoly<Rational>& phi, const Rational& r2,
                                             const Rational& r1, const Rational& r0) {
  const Rational e1 = phi.t, e2 = phi.s, e3 = phi.d;
  // power sums of the roots of phi
  std::array<Rational, 7> p{};
  p[0] = 3;
  p[1] = e1;
  p[2] = e1 * p[1] - 2 * e2;
  p[3] = e1 * p[2] - e2 * p[1] + 3 * e3;
  for (int k = 4; k <= 6; ++k)
    p[static_cast<std::size_t>(k)] = e1 * p[static_cast<std::size_t>(k - 1)] -
                                     e2 * p[static_cast<std::size_t>(k - 2)] +
                                     e3 * p[static_cast<std::size_t>(k - 3)];
  auto sum_poly = [&](const std::vector<Rational>& coef) {
    Rational acc(0);
    for (std::size_t i = 0; i < coef.size(); ++i) acc += coef[i] * p[i];
    return acc;
  };
  // v = r0 + r1 L + r2 L^2 ; v^2, v^3 as polynomials in L
  const std::vector<Rational> v{r0, r1, r2};
  auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  const auto v2 = mul(v, v), v3 = mul(v2, v);
  const Rational P1 = sum_poly(v), P2 = sum_poly(v2), P3 = sum_poly(v3);
  const Rational E1 = P1;
  const Rational E2 = (P1 * P1 - P2) / 2;
  const Rational E3 = (P1 * P1 * P1 - 3 * P1 * P2 + 2 * P3) / 6;
  return CubicPoly<Rational>{E1, E2, E3};
}

}  // namespace detail

// Exact rational interval arithmetic (for decide_gap and root-image bounds).
struct RatInterval {
  Rational lo, hi;
  static RatInterval point(const Rational& v) { return {v, v}; }
  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const RatInterval& o) const {
    const Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
  }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  RatInterval operator/(const RatInterval& o) const {
    const Rational a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
  }
};

inline RatInterval poly_eval_interval(const Poly& p, const RatInterval& x) {
  RatInterval r = RatInterval::point(Rational(0));
  for (int i = poly_deg(p); i >= 0; --i)
    r = r * x + RatInterval::point(p[static_cast<std::size_t>(i)]);
  return r;
}

inline RootStructure root_structure(const CubicPoly<Rational>& phi) {
  const Poly p = detail::to_poly(phi);
  const Poly g = poly_gcd(p, poly_deriv(p));
  const int dg = poly_deg(g);
  if (dg == 2) {
    // triple root; for a monic rational cubic it is t/3
    return TripleRoot{phi.t / 3};
  }
  if (dg == 1) {
    // double root at the rational root of the linear gcd
    const Rational lam2 = -g[0] / g[1];
    const Rational lam1 = phi.t - 2 * lam2;
    return DoubleSimple{lam1, lam2};
  }
  // square-free: discriminant decides 3 real vs 1 real + conjugate pair
  const Rational t = phi.t, s = phi.s, d = phi.d;
  const Rational disc =
      18 * t * s * d - 4 * t * t * t * d + t * t * s * s - 4 * s * s * s - 27 * d * d;
  const auto rroots = detail::rational_roots(phi);
  if (disc > 0) {
    std::array<AlgebraicReal, 3> roots;
    if (rroots.size() == 3) {
      for (int i = 0; i < 3; ++i) roots[static_cast<std::size_t>(i)] = AlgebraicReal(rroots[static_cast<std::size_t>(2 - i)]);
    } else {
      auto iv = detail::isolate_real_roots(p);
      if (iv.size() != 3) throw InconsistentPaper("positive discriminant but != 3 isolated real roots");
      for (int i = 0; i < 3; ++i) {
        const auto& [a, b] = iv[static_cast<std::size_t>(2 - i)];
        roots[static_cast<std::size_t>(i)] = AlgebraicReal(phi, a, b);
        roots[static_cast<std::size_t>(i)].refine_below(rat(1, 4));
      }
      // upgrade any that happen to be rational
      for (auto& r : roots)
        for (const auto& q : rroots)
          if (!r.is_rational() && r.lo() <= q && q <= r.hi()) r = AlgebraicReal(q);
    }
    return ThreeDistinctReal{roots};
  }
  // one real root
  AlgebraicReal lam1;
  if (!rroots.empty()) {
    lam1 = AlgebraicReal(rroots[0]);
  } else {
    auto iv = detail::isolate_real_roots(p);
    if (iv.size() != 1) throw InconsistentPaper("negative discriminant but != 1 isolated real root");
    lam1 = AlgebraicReal(phi, iv[0].first, iv[0].second);
    lam1.refine_below(rat(1, 4));
  }
  // p0 = (t - lam1)/2 ; q2 = (3 lam1^2 - 2 t lam1 + 4 s - t^2)/4
  AlgebraicReal pr, q2;
  if (lam1.is_rational()) {
    const Rational l = lam1.rational();
    pr = AlgebraicReal((t - l) / 2);
    q2 = AlgebraicReal((3 * l * l - 2 * t * l + 4 * s - t * t) / 4);
  } else {
    auto derived = [&](const Rational& r2, const Rational& r1, const Rational& r0) {
      CubicPoly<Rational> def = detail::transformed_cubic(phi, r2, r1, r0);
      const Poly defp = detail::to_poly(def);
      // square-free part of def
      Poly sfree = defp;
      {
        const Poly gg = poly_gcd(defp, poly_deriv(defp));
        if (poly_deg(gg) > 0) {
          // divide defp by gg
          Poly quot(defp.size(), Rational(0));
          Poly rem = defp;
          const int dgg = poly_deg(gg);
          while (poly_deg(rem) >= dgg) {
            const int dr = poly_deg(rem);
            const Rational f =
                rem[static_cast<std::size_t>(dr)] / gg[static_cast<std::size_t>(dgg)];
            quot[static_cast<std::size_t>(dr - dgg)] += f;
            for (int i = 0; i <= dgg; ++i)
              rem[static_cast<std::size_t>(dr - dgg + i)] -= f * gg[static_cast<std::size_t>(i)];
            rem[static_cast<std::size_t>(dr)] = 0;
          }
          sfree = poly_trim(std::move(quot));
        }
      }
      const auto chain = sturm_chain(sfree);
      AlgebraicReal lam = lam1;
      for (int iter = 0; iter < 20000; ++iter) {
        const RatInterval img = poly_eval_interval(
            Poly{r0, r1, r2}, RatInterval{lam.lo(), lam.hi()});
        if (poly_eval(sfree, img.lo) != 0 && poly_eval(sfree, img.hi) != 0 &&
            sturm_count(chain, img.lo, img.hi) == 1) {
          // convert sfree (degree<=3) back to a monic cubic container
          const int dd = poly_deg(sfree);
          CubicPoly<Rational> defc;
          if (dd == 3) {
            const Rational lead = sfree[3];
            defc = CubicPoly<Rational>{-sfree[2] / lead, sfree[1] / lead, -sfree[0] / lead};
          } else if (dd == 2) {
            // embed quadratic q(x) into cubic x*q(x) shifted away from 0? keep as
            // cubic with an extra distant root instead: (x - M) * q(x)
            const Rational lead = sfree[static_cast<std::size_t>(dd)];
            Rational b = sfree[1] / lead, c = sfree[0] / lead;
            Rational M = scalar_ops<Rational>::abs(b) + scalar_ops<Rational>::abs(c) +
                         scalar_ops<Rational>::abs(img.hi) + 2;
            // (x^2 + b x + c)(x - M) = x^3 + (b-M) x^2 + (c - Mb) x - Mc
            defc = CubicPoly<Rational>{-(b - M), c - M * b, M * c};
          } else {
            return AlgebraicReal(-sfree[0] / sfree[1]);
          }
          return AlgebraicReal(defc, img.lo, img.hi);
        }
        lam.refine();
      }
      throw NoGapViolated("failed to isolate derived algebraic value");
    };
    pr = derived(Rational(0), Rational(-1) / 2, t / 2);
    q2 = derived(Rational(3) / 4, -t / 2, s - t * t / 4);
  }
  return RealPlusComplexPair{lam1, pr, q2};
}

inline AlgebraicReal refine(AlgebraicReal r) {
  r.refine();
  return r;
}

enum class GapSide { LeqA, GeqB };

// Decide on which side of the open gap (a,b) the value num(root)/den(root)
// lies; the caller guarantees the value is not inside the gap.
inline GapSide decide_gap(const Poly& num, const Poly& den, AlgebraicReal root, const Rational& a,
                          const Rational& b) {
  for (int iter = 0; iter < 10000; ++iter) {
    const RatInterval x{root.lo(), root.hi()};
    const RatInterval dv = poly_eval_interval(den, x);
    if (!dv.contains_zero()) {
      const RatInterval v = poly_eval_interval(num, x) / dv;
      const bool leq = v.hi < b;   // value-interval subset of (-inf, b)
      const bool geq = v.lo > a;   // value-interval subset of (a, +inf)
      if (leq && geq) throw NoGapViolated("value lies inside the forbidden gap");
      if (leq) return GapSide::LeqA;
      if (geq) return GapSide::GeqB;
    }
    if (root.is_rational() && !dv.contains_zero()) {
      // exact evaluate cannot make progress by refinement
      const Rational v = poly_eval(num, root.rational()) / poly_eval(den, root.rational());
      if (v <= a) return GapSide::LeqA;
      if (v >= b) return GapSide::GeqB;
      throw NoGapViolated("rational value lies inside the forbidden gap");
    }
    root.refine();
  }
  throw NoGapViolated();
}

}  // namespace albert
