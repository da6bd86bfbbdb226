// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "albert/samples.hpp"
#include "albert/stabilizer.hpp"
#include "albert/transport.hpp"

using namespace albert;
using O = Octonion<Rational>;
using J = JordanElement<Rational>;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- C1: octonion identity suite, >=1000 samples, < 10 s -------------------
Criterion c1() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  samples::Rng rng(1001);
  long bad = 0;
  for (int n = 0; n < 1000; ++n) {
    const O x = rng.octonion(5, 5), y = rng.octonion(5, 5), z = rng.octonion(5, 5);
    const O a = rng.octonion(5, 5), b = rng.octonion(5, 5);
    bool ok = true;
    ok &= oct_inner(x * y, x * y) == oct_inner(x, x) * oct_inner(y, y);
    ok &= oct_inner(a * x, a * y) == oct_inner(a, a) * oct_inner(x, y);
    ok &= oct_inner(x * a, y * a) == oct_inner(a, a) * oct_inner(x, y);
    ok &= oct_inner(a * x, b * y) + oct_inner(b * x, a * y) ==
          2 * oct_inner(a, b) * oct_inner(x, y);
    ok &= oct_inner(a * x, y) == oct_inner(x, oct_conj(a) * y);
    ok &= oct_inner(x * a, y) == oct_inner(x, y * oct_conj(a));
    ok &= oct_conj(x * y) == oct_conj(y) * oct_conj(x);
    ok &= x * oct_conj(x) == O::scalar(oct_inner(x, x));
    ok &= a * (oct_conj(a) * x) == (a * oct_conj(a)) * x;
    ok &= a * (x * oct_conj(a)) == (a * x) * oct_conj(a);
    ok &= x * (a * oct_conj(a)) == (x * a) * oct_conj(a);
    ok &= a * (a * x) == (a * a) * x;
    ok &= a * (x * a) == (a * x) * a;
    ok &= x * (a * a) == (x * a) * a;
    ok &= oct_conj(b) * (a * x) + oct_conj(a) * (b * x) == (2 * oct_inner(a, b)) * x;
    ok &= (x * a) * oct_conj(b) + (x * b) * oct_conj(a) == (2 * oct_inner(a, b)) * x;
    ok &= (a * x) * y + x * (y * a) == a * (x * y) + (x * y) * a;
    ok &= (x * a) * y + (x * y) * a == x * (a * y) + x * (y * a);
    ok &= (a * x) * y + (x * a) * y == a * (x * y) + x * (a * y);
    ok &= (a * x) * (y * a) == a * ((x * y) * a);
    ok &= oct_re(x * y) == oct_re(y * x);
    ok &= oct_re(x * (y * z)) == oct_re(y * (z * x));
    ok &= oct_re(x * (y * z)) == oct_re(z * (x * y));
    if (!ok) ++bad;
  }
  const double dt = seconds_since(t0);
  if (bad) c.fail(std::to_string(bad) + " samples violated an identity");
  if (dt >= 10.0) c.fail("runtime " + std::to_string(dt) + "s >= 10s");
  c.detail = "1000 samples, " + std::to_string(dt).substr(0, 5) + "s" +
             (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

// ---- C2: signature table ----------------------------------------------------
Criterion c2() {
  Criterion c;
  struct Row {
    J y;
    Signature want;
    const char* name;
  };
  const std::vector<Row> rows = {
      {J::Ei(0), {9, 1, 17}, "E1"},
      {J::Ei(2), {1, 9, 17}, "E3"},
      {J::Ei(0) - J::Ei(1), {18, 2, 7}, "E1-E2"},
      {-J::Ei(0) + J::Ei(1), {2, 18, 7}, "-E1+E2"}};
  for (const auto& row : rows) {
    const Signature got = b_signature(row.y);
    std::ostringstream os;
    os << row.name << "=(" << got.neg << "," << got.pos << "," << got.null << ")";
    c.detail += (c.detail.empty() ? "" : " ") + os.str();
    if (!(got == row.want)) {
      std::ostringstream why;
      why << row.name << " expected (" << row.want.neg << "," << row.want.pos << ","
          << row.want.null << ")";
      c.fail(why.str());
    }
  }
  return c;
}

// ---- C3: cross-product suite ------------------------------------------------
Criterion c3() {
  Criterion c;
  samples::Rng rng(1003);
  const J E = J::unitE();
  long bad = 0;
  if (!(cross(E, E) == E)) ++bad;
  for (int n = 0; n < 500; ++n) {
    const J X = rng.jordan(4, 4), Y = rng.jordan(4, 4);
    bool ok = true;
    ok &= trace(cross(X, Y)) == (trace(X) * trace(Y) - inner(X, Y)) / 2;
    ok &= cross(X, E) == rat(1, 2) * (trace(X) * E - X);
    const J s = sharp(X);
    ok &= cross(s, E) == rat(1, 2) * (trace(s) * E - s);
    ok &= sharp(s) == det(X) * X;
    ok &= cross(s, X) == rat(1, 2) * (-trace(X) * s - trace(s) * X +
                                      (trace(s) * trace(X) - det(X)) * E);
    ok &= trace(s) == (trace(X) * trace(X) - inner(X, X)) / 2;
    ok &= s == cross(X, X);
    // the coordinate inner product matches tr(X o Y)
    ok &= inner(X, Y) == trace(jmul(X, Y));
    // det consistency through the trilinear form
    ok &= inner(X, s) == 3 * det(X);
    if (!ok) ++bad;
  }
  // cross-product basis table
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    if (!(cross(J::Ei(i), J::Ei(i)) == J::zero())) ++bad;
    if (!(cross(J::Ei(i), J::Ei(i1)) == rat(1, 2) * J::Ei(i2))) ++bad;
    for (int u = 0; u < 8; ++u) {
      const O x = O::unit(u);
      if (!(cross(J::Ei(i), J::Fi1(i, x)) == J::Fi1(i, rat(-1, 2) * x))) ++bad;
      if (!(cross(J::Ei(i), J::Fi1(i1, x)) == J::zero())) ++bad;
      for (int v = 0; v < 8; ++v) {
        const O y = O::unit(v);
        const Rational e = eps0(i) > 0 ? rat(1) : rat(-1);
        if (!(cross(J::Fi1(i, x), J::Fi1(i, y)) == (-e * oct_inner(x, y)) * J::Ei(i))) ++bad;
        if (!(cross(J::Fi1(i1, x), J::Fi1(i2, y)) ==
              J::Fi1(i, (-e / 2) * oct_conj(x * y))))
          ++bad;
      }
    }
  }
  if (bad) c.fail(std::to_string(bad) + " identity violations");
  c.detail = "500 samples + basis table";
  return c;
}

// ---- C4: generator verification + exp closed forms ---------------------------
Criterion c4() {
  Criterion c;
  samples::Rng rng(1004);
  std::vector<F4Operator<Rational>> inventory;
  for (int i = 0; i < 3; ++i) inventory.push_back(sigma_op<Rational>(i));
  for (int n = 0; n < 9; ++n)
    inventory.push_back(phi0(triality_triple_LRT(rng.unit(), static_cast<int>(rng.range(0, 2)))));
  for (int n = 0; n < 6; ++n) inventory.push_back(phi0(spin7_pair(rng.unit(true), rng.unit(true))));
  for (int n = 0; n < 4; ++n) inventory.push_back(phi0(g2_mapping_to_e1(rng.unit(true))));
  for (int n = 0; n < 6; ++n) {
    const auto [cc, ss] = rng.pyth_pair();
    inventory.push_back(exp_rot(rng.unit(), cc, ss));
  }
  for (int n = 0; n < 6; ++n) {
    const auto [ch, sh] = rng.hyper_pair();
    inventory.push_back(exp_boost(static_cast<int>(rng.range(1, 2)), rng.unit(), ch, sh));
  }
  for (int n = 0; n < 4; ++n) {
    inventory.push_back(exp_g(1, rng.octonion(3, 3)));
    inventory.push_back(exp_g(-1, rng.octonion(3, 3)));
    inventory.push_back(exp_g(2, rng.imaginary(3, 3)));
    inventory.push_back(exp_g(-2, rng.imaginary(3, 3)));
  }
  long verified = 0;
  for (auto& g : inventory)
    if (verify_automorphism(g).ok) ++verified;
  if (verified != static_cast<long>(inventory.size()))
    c.fail("only " + std::to_string(verified) + "/" + std::to_string(inventory.size()) +
           " atoms verified");
  if (inventory.size() < 40) c.fail("inventory smaller than 40");

  // float instances vs numeric exponential
  std::mt19937_64 eng(4242);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto expm = [](Mat<double> m) {
    int k = 0;
    while (m.max_abs_double() > 0.25) {
      m = 0.5 * m;
      ++k;
    }
    Mat<double> sum = Mat<double>::identity(m.rows());
    Mat<double> pow = Mat<double>::identity(m.rows());
    for (int n = 1; n <= 24; ++n) {
      pow = (1.0 / n) * (pow * m);
      sum = sum + pow;
    }
    for (int i = 0; i < k; ++i) sum = sum * sum;
    return sum;
  };
  double worst = 0;
  for (int n = 0; n < 20; ++n) {
    Octonion<double> a;
    double norm = 0;
    for (int i = 0; i < 8; ++i) {
      a[i] = dist(eng);
      norm += a[i] * a[i];
    }
    for (int i = 0; i < 8; ++i) a[i] /= std::sqrt(norm);
    const double t = dist(eng);
    const int slot = n % 3;
    const Mat<double> numeric = expm(t * lie_A<double>(slot, a).m);
    const Mat<double> closed =
        slot == 0 ? exp_rot<double>(a, std::cos(t), std::sin(t)).m
                  : exp_boost<double>(slot, a, std::cosh(t), std::sinh(t)).m;
    worst = std::max(worst, (numeric - closed).max_abs_double());
  }
  if (worst > 1e-10) c.fail("exp closed form deviates " + std::to_string(worst));
  std::ostringstream os;
  os << inventory.size() << " atoms verified exactly; exp deviation " << worst;
  c.detail = os.str();
  return c;
}

// ---- C5: Lie algebra structure ------------------------------------------------
Criterion c5() {
  Criterion c;
  samples::Rng rng(1005);
  const auto& d4 = d4_basis();
  std::vector<LieElement<Rational>> basis = d4;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 8; ++j) basis.push_back(lie_A<Rational>(i, O::unit(j)));
  // rank 52
  Mat<Rational> B(729, 52);
  for (int k = 0; k < 52; ++k)
    for (int r = 0; r < 27; ++r)
      for (int cc = 0; cc < 27; ++cc)
        B(r * 27 + cc, k) = basis[static_cast<std::size_t>(k)].m(r, cc);
  if (mat_rank(B) != 52) c.fail("basis rank != 52");
  // ad multiplicities
  const LieElement<Rational> A31 = lie_A<Rational>(2, O::one());
  {
    Mat<Rational> rhs(729, 52);
    for (int k = 0; k < 52; ++k) {
      const Mat<Rational> cm = A31.m * basis[static_cast<std::size_t>(k)].m -
                               basis[static_cast<std::size_t>(k)].m * A31.m;
      for (int r = 0; r < 27; ++r)
        for (int cc = 0; cc < 27; ++cc) rhs(r * 27 + cc, k) = cm(r, cc);
    }
    Mat<Rational> Bc = B;
    if (gauss_eliminate(Bc, &rhs) != 52) c.fail("bracket left the 52-dim span");
    Mat<Rational> ad(52, 52);
    for (int i = 0; i < 729; ++i) {
      int pc = -1;
      for (int j = 0; j < 52; ++j)
        if (Bc(i, j) != 0) {
          pc = j;
          break;
        }
      if (pc < 0) continue;
      for (int k = 0; k < 52; ++k) ad(pc, k) = rhs(i, k) / Bc(i, pc);
    }
    const int want[] = {7, 8, 22, 8, 7};
    int idx = 0;
    for (long lam : {-2L, -1L, 0L, 1L, 2L}) {
      Mat<Rational> shift = ad;
      for (int i = 0; i < 52; ++i) shift(i, i) -= rat(lam);
      const int mult = 52 - mat_rank(shift);
      if (mult != want[idx]) {
        std::ostringstream os;
        os << "ad eigenvalue " << lam << " multiplicity " << mult << " != " << want[idx];
        c.fail(os.str());
      }
      ++idx;
    }
    Mat<Rational> prod = Mat<Rational>::identity(52);
    for (long lam : {-2L, -1L, 0L, 1L, 2L}) {
      Mat<Rational> shift = ad;
      for (int i = 0; i < 52; ++i) shift(i, i) -= rat(lam);
      prod = prod * shift;
    }
    if (!prod.is_zero()) c.fail("ad not annihilated by its eigenvalue product");
  }
  // bracket law on 100 samples
  for (int n = 0; n < 100; ++n) {
    const O x = rng.octonion(3, 3), y = rng.octonion(3, 3);
    if (!(bracket(lie_G<Rational>(1, x), lie_G<Rational>(1, y)).m ==
          lie_G<Rational>(2, rat(2) * oct_im(x * oct_conj(y))).m)) {
      c.fail("[G1,G1] != G2(2 Im(x conj y))");
      break;
    }
  }
  // nilpotency degrees
  {
    const LieElement<Rational> g2v = lie_G<Rational>(2, O::unit(5) - rat(2) * O::unit(3));
    if (!(g2v.m * g2v.m * g2v.m).is_zero()) c.fail("G2^3 != 0");
    const LieElement<Rational> g1v = lie_G<Rational>(1, O::one() + O::unit(3));
    Mat<Rational> p5 = g1v.m * g1v.m;
    p5 = p5 * p5 * g1v.m;
    if (!p5.is_zero()) c.fail("G1^5 != 0");
  }
  // killing form: 500 nonzero samples, closed form, and the -72 value
  if (!(killing(A31, sigma_twist(0, A31)) == -72)) c.fail("B(A31, ~A31) != -72");
  for (int n = 0; n < 500; ++n) {
    LieElement<Rational> phi = lie_A<Rational>(0, rng.octonion(2, 2)) +
                               lie_A<Rational>(1, rng.octonion(2, 2)) +
                               lie_A<Rational>(2, rng.octonion(2, 2)) +
                               rng.rational(2, 2) * d4[static_cast<std::size_t>(rng.range(0, 27))] +
                               rng.rational(2, 2) * d4[static_cast<std::size_t>(rng.range(0, 27))];
    if (phi.m.is_zero()) continue;
    const Rational b = killing(phi, sigma_twist(0, phi));
    Rational closed(0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 8; ++j) {
        const O col = mat_apply_oct(phi.D[static_cast<std::size_t>(i)], O::unit(j));
        closed += oct_inner(col, col);
      }
      closed +=
          24 * oct_inner(phi.a[static_cast<std::size_t>(i)], phi.a[static_cast<std::size_t>(i)]);
    }
    if (!(b == -3 * closed)) {
      c.fail("killing closed form mismatch");
      break;
    }
    if (!(b < 0)) {
      c.fail("B(phi, ~phi) not negative");
      break;
    }
  }
  c.detail = "rank 52; ad mult {7,8,22,8,7}; 100 brackets; 500 killing samples";
  return c;
}

// corpus shared by C6/C7
std::vector<std::pair<int, J>> canonical_corpus() {
  std::vector<std::pair<int, J>> out;
  const long trip[10][3] = {{3, 2, 1},  {5, 1, -2}, {7, 4, 2},  {1, 0, -1}, {9, 5, 3},
                            {2, 1, 0},  {4, -1, -3}, {10, 6, 5}, {6, 2, -5}, {8, 3, 1}};
  for (int k = 0; k < 10; ++k) {
    const Rational l1 = rat(trip[k][0]), l2 = rat(trip[k][1]), l3 = rat(trip[k][2]);
    out.push_back({1, J::diag(l1, l2, l3)});
    out.push_back({2, J::diag(l2, l3, l1)});
    out.push_back({3, J::diag(l3, l1, l2)});
  }
  const long pq[10][3] = {{0, 0, 1},  {1, 2, 1},  {-1, 3, 2}, {2, -1, 1}, {0, 1, 3},
                          {1, -2, 2}, {3, 0, 1},  {-2, 1, 1}, {1, 1, 2},  {0, -3, 1}};
  for (int k = 0; k < 10; ++k) {
    const Rational p = rat(pq[k][0]), l1 = rat(pq[k][1]), q = rat(pq[k][2]);
    out.push_back({4, J::diag(p, p, l1) + J::Fi1(2, q * O::one())});
  }
  const long dbl[10][2] = {{5, 2}, {1, 0}, {-1, 2}, {3, -2}, {7, 1},
                           {0, 1}, {2, 5}, {-3, -1}, {4, 0},  {6, -4}};
  for (int k = 0; k < 10; ++k) {
    const Rational l1 = rat(dbl[k][0]), l2 = rat(dbl[k][1]);
    out.push_back({5, J::diag(l1, l2, l2)});
    out.push_back({6, J::diag(l2, l2, l1)});
    out.push_back({7, J::diag(l2, l2, l1) + J::Pplus()});
    out.push_back({8, J::diag(l2, l2, l1) + J::Pminus()});
  }
  for (int k = 0; k < 10; ++k) {
    const Rational l = rat(k - 4, k % 3 + 1);
    out.push_back({9, l * J::unitE()});
    out.push_back({10, l * J::unitE() + J::Pplus()});
    out.push_back({11, l * J::unitE() + J::Pminus()});
    out.push_back({12, l * J::unitE() + J::Qplus(O::one())});
  }
  return out;
}

bool same_params(const OrbitClass& a, const OrbitClass& b) {
  if (a.case_id != b.case_id) return false;
  if (const auto* p = std::get_if<ParamsDistinct>(&a.params)) {
    const auto& q = std::get<ParamsDistinct>(b.params);
    for (int i = 0; i < 3; ++i)
      if (!AlgebraicReal::same_root(p->roots[static_cast<std::size_t>(i)],
                                    q.roots[static_cast<std::size_t>(i)]))
        return false;
    return p->h_index == q.h_index;
  }
  if (const auto* p = std::get_if<ParamsComplexPair>(&a.params)) {
    const auto& q = std::get<ParamsComplexPair>(b.params);
    return AlgebraicReal::same_root(p->lambda1, q.lambda1) &&
           AlgebraicReal::same_root(p->p, q.p) &&
           AlgebraicReal::same_root(p->q_squared, q.q_squared);
  }
  if (const auto* p = std::get_if<ParamsDoubleRoot>(&a.params)) {
    const auto& q = std::get<ParamsDoubleRoot>(b.params);
    return p->lambda1 == q.lambda1 && p->lambda2 == q.lambda2;
  }
  const auto& p = std::get<ParamsTripleRoot>(a.params);
  const auto& q = std::get<ParamsTripleRoot>(b.params);
  return p.lambda == q.lambda;
}

// ---- C6: classifier round trip ------------------------------------------------
Criterion c6(const std::vector<std::pair<int, J>>& corpus,
             std::vector<std::pair<OrbitClass, J>>& scrambled_out) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  samples::Rng rng(1006);
  long runs = 0, bad = 0;
  for (const auto& [case_id, C] : corpus) {
    const OrbitClass base = classify(C);
    if (base.case_id != case_id) {
      c.fail("canonical instance misclassified (case " + std::to_string(case_id) + ")");
      continue;
    }
    for (int n = 0; n < 20; ++n) {
      const J X = samples::bounded_scramble(rng, C, 4, 40.0).second;
      const OrbitClass oc = classify(X);
      ++runs;
      if (!(oc.case_id == case_id && same_params(oc, base))) ++bad;
      scrambled_out.push_back({oc, X});
    }
  }
  const double dt = seconds_since(t0);
  if (bad) c.fail(std::to_string(bad) + "/" + std::to_string(runs) + " runs disagreed");
  if (dt >= 300.0) c.fail("runtime " + std::to_string(dt) + "s >= 5 min");
  std::ostringstream os;
  os << runs << " runs, " << dt << "s";
  c.detail = os.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

// ---- C7: transporter -----------------------------------------------------------
Criterion c7(const std::vector<std::pair<OrbitClass, J>>& scrambled) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  long runs = 0, bad = 0, exact_paths = 0;
  double worst_resid = 0, worst_drift = 0;
  for (const auto& [oc, X] : scrambled) {
    ++runs;
    try {
      const TransportResult r = reduce(X, oc);
      if (r.exact) {
        ++exact_paths;
        if (!(r.g_exact->apply(X) == *r.target_exact)) ++bad;
        if (!(charpoly(*r.target_exact) == charpoly(X))) ++bad;
        if (!r.g_exact->verified) ++bad;
      } else {
        worst_resid = std::max(worst_resid, r.residual);
        worst_drift = std::max(worst_drift, r.charpoly_drift);
        if (r.residual > 1e-8 || r.charpoly_drift > 1e-8) ++bad;
        if (!r.g_float->verified) ++bad;
      }
    } catch (const DomainError& e) {
      ++bad;
      if (c.pass) c.fail(std::string("reduce threw: ") + e.what());
    }
  }
  if (bad) c.fail(std::to_string(bad) + "/" + std::to_string(runs) + " reductions failed");
  std::ostringstream os;
  os << runs << " reductions (" << exact_paths << " exact), worst residual " << worst_resid
     << ", worst drift " << worst_drift << ", " << seconds_since(t0) << "s";
  c.detail = os.str() + (c.detail.empty() ? "" : "; " + c.detail);
  return c;
}

// ---- C8: stabilizer witnesses ---------------------------------------------------
Criterion c8() {
  Criterion c;
  samples::Rng rng(1008);
  for (int k = 1; k <= 12; ++k) {
    OrbitClass oc;
    oc.case_id = k;
    if (k <= 3)
      oc.params =
          ParamsDistinct{{AlgebraicReal(rat(3)), AlgebraicReal(rat(2)), AlgebraicReal(rat(1))}, k};
    else if (k == 4)
      oc.params =
          ParamsComplexPair{AlgebraicReal(rat(-1)), AlgebraicReal(rat(1, 2)), AlgebraicReal(rat(4))};
    else if (k <= 8)
      oc.params = ParamsDoubleRoot{rat(5), rat(2)};
    else
      oc.params = ParamsTripleRoot{rat(2)};
    try {
      const StabilizerWitness w = stabilizer_witness(oc);
      for (const auto& g : w.generators)
        if (!(g.apply(w.fixed_point) == w.fixed_point)) c.fail("case " + std::to_string(k));
    } catch (const DomainError& e) {
      c.fail("case " + std::to_string(k) + ": " + e.what());
    }
  }
  auto random_h = [&rng] {
    HeisenbergElement<Rational> h;
    h.g = spin7_pair(rng.unit(true), rng.unit(true));
    h.p = rng.imaginary(3, 3);
    h.x = rng.octonion(3, 3);
    return h;
  };
  for (int n = 0; n < 200; ++n) {
    const auto a = random_h(), b = random_h();
    if (!(phi_hom(h_mul(a, b)).m == compose(phi_hom(a), phi_hom(b)).m)) {
      c.fail("phi homomorphism violated");
      break;
    }
  }
  for (int n = 0; n < 100; ++n) {
    const TrialityTriple<Rational> g = spin7_pair(rng.unit(true), rng.unit(true));
    const O p = rng.imaginary(3, 3);
    const O x = rng.octonion(3, 3);
    const F4Operator<Rational> f0 = phi0(g);
    const F4Operator<Rational> lhs = compose(
        f0, compose(compose(exp_g<Rational>(2, p), exp_g<Rational>(1, x)), inverse(f0)));
    const F4Operator<Rational> rhs = compose(exp_g<Rational>(2, mat_apply_oct(g.g3, p)),
                                             exp_g<Rational>(1, mat_apply_oct(g.g1, x)));
    if (!(lhs.m == rhs.m)) {
      c.fail("phi0 conjugation law violated");
      break;
    }
  }
  for (int n = 0; n < 500; ++n) {
    const auto a = random_h(), b = random_h(), d = random_h();
    const auto lhs = h_mul(h_mul(a, b), d);
    const auto rhs = h_mul(a, h_mul(b, d));
    if (!(lhs.p == rhs.p && lhs.x == rhs.x && (lhs.g.g1 - rhs.g.g1).is_zero() &&
          (lhs.g.g2 - rhs.g.g2).is_zero() && (lhs.g.g3 - rhs.g.g3).is_zero())) {
      c.fail("Heisenberg associativity violated");
      break;
    }
  }
  c.detail = "12 witnesses; 200 hom pairs; 100 conjugations; 500 associativity triples";
  return c;
}

// ---- C9: R+- checks --------------------------------------------------------------
Criterion c9() {
  Criterion c;
  samples::Rng rng(1009);
  for (int n = 0; n < 100; ++n) {
    const Rational r = rng.rational();
    const O x = rng.unit();
    if (!(sharp(r * J::Pminus() + J::Qplus(x)) == J::Pminus())) {
      c.fail("sharp(r P- + Q+(x)) != P-");
      break;
    }
  }
  long candidates = 0, hits = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (int i = 0; i < 8; ++i)
        for (int j = 1; j < 8; ++j) {
          // traceless family mixing P+-, Q+- and F3 directions
          J X = rat(a) * J::Pplus() + rat(b) * J::Qplus(O::unit(i)) + J::Fi1(2, rat(a) * O::unit(j)) +
                rat(b) * J::Qminus(O::unit(j));
          X = X - (trace(X) / 3) * J::unitE();
          ++candidates;
          if (sharp(X) == J::Pplus()) ++hits;
        }
  if (hits) c.fail(std::to_string(hits) + " R+ members found");
  c.detail = "100 R- samples; " + std::to_string(candidates) + " grid candidates, 0 in R+";
  return c;
}

// ---- C10: membership disjointness --------------------------------------------------
Criterion c10() {
  Criterion c;
  samples::Rng rng(1010);
  long collisions = 0, boundary = 0;
  for (int n = 0; n < 1000; ++n) {
    J X = rng.jordan(3, 3);
    if (n % 4 == 0) X = rng.rational() * J::Pminus() + J::Qplus(rng.octonion(3, 3));
    if (n % 7 == 0) X = rng.word(2).apply(J::Ei(0));
    const J s = sharp(X);
    int hits = 0;
    if (jis_zero(X)) ++hits;
    if (jis_zero(s) && trace(X) == 1) ++hits;
    if (jis_zero(s) && trace(X) == 0 && !jis_zero(X)) ++hits;
    if (!jis_zero(s) && trace(X) == 0 && trace(s) == 0 && det(X) == 0) ++hits;
    if (hits > 1) ++collisions;
  }
  // every tr=1, sharp=0 sample avoids the open interval (0,1)
  for (int n = 0; n < 300; ++n) {
    const F4Operator<Rational> g = rng.word(3);
    for (const J& base : {J::Ei(0), J::Ei(2)}) {
      const J X = g.apply(base);
      const Rational v = inner(X, J::Ei(0));
      if (!(v >= 1 || v <= 0)) ++boundary;
    }
  }
  if (collisions) c.fail(std::to_string(collisions) + " class collisions");
  if (boundary) c.fail(std::to_string(boundary) + " samples inside (0,1)");
  c.detail = "1000 sweep samples; 600 hyperbolic-plane samples";
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion result;
  };
  std::vector<Entry> results;
  results.push_back({"C1 octonion identity suite", c1()});
  results.push_back({"C2 signature table", c2()});
  results.push_back({"C3 cross-product suite", c3()});
  results.push_back({"C4 generator verification", c4()});
  results.push_back({"C5 lie-algebra structure", c5()});
  {
    const auto corpus = canonical_corpus();
    std::vector<std::pair<OrbitClass, J>> scrambled;
    results.push_back({"C6 classifier round-trip", c6(corpus, scrambled)});
    results.push_back({"C7 transporter", c7(scrambled)});
  }
  results.push_back({"C8 stabilizer witnesses", c8()});
  results.push_back({"C9 R+- checks", c9()});
  results.push_back({"C10 membership disjointness", c10()});

  bool all = true;
  for (const auto& e : results) {
    std::printf("[%s] %s%s%s\n", e.result.pass ? "PASS" : "FAIL", e.name,
                e.result.detail.empty() ? "" : ": ", e.result.detail.c_str());
    all &= e.result.pass;
  }
  return all ? 0 : 1;
}
