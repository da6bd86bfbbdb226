#pragma once

#include <cstdint>
#include <random>

#include "albert/f4group.hpp"

namespace albert::samples {

// Deterministic sample streams for property tests and the selftest command.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long range(long lo, long hi) {  // inclusive
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }
  Rational rational(long max_num = 9, long max_den = 9) {
    return rat(range(-max_num, max_num), range(1, max_den));
  }
  Rational nonzero_rational(long max_num = 9, long max_den = 9) {
    Rational v = rational(max_num, max_den);
    while (v == 0) v = rational(max_num, max_den);
    return v;
  }
  Octonion<Rational> octonion(long max_num = 9, long max_den = 9) {
    Octonion<Rational> o;
    for (int i = 0; i < 8; ++i) o[i] = rational(max_num, max_den);
    return o;
  }
  Octonion<Rational> imaginary(long max_num = 9, long max_den = 9) {
    Octonion<Rational> o = octonion(max_num, max_den);
    o[0] = 0;
    return o;
  }
  // Rational unit from a Pythagorean pair on two basis axes.
  Octonion<Rational> unit(bool imaginary_only = false) {
    const auto [c, s] = pyth_pair();
    const int lo = imaginary_only ? 1 : 0;
    int i = static_cast<int>(range(lo, 7));
    int j = static_cast<int>(range(lo, 7));
    while (j == i) j = static_cast<int>(range(lo, 7));
    return c * Octonion<Rational>::unit(i) + s * Octonion<Rational>::unit(j);
  }
  std::pair<Rational, Rational> pyth_pair() {  // c^2 + s^2 = 1
    static const std::pair<long, long> triples[] = {{3, 4}, {5, 12}, {8, 15}, {20, 21}, {7, 24}};
    auto [a, b] = triples[range(0, 4)];
    const long c = static_cast<long>(std::lround(std::sqrt(double(a * a + b * b))));
    if (range(0, 1)) std::swap(a, b);
    return {rat(range(0, 1) ? a : -a, c), rat(range(0, 1) ? b : -b, c)};
  }
  std::pair<Rational, Rational> hyper_pair() {  // ch^2 - sh^2 = 1, ch > 0
    static const std::pair<std::pair<long, long>, long> items[] = {
        {{5, 3}, 4}, {{13, 5}, 12}, {{17, 8}, 15}, {{25, 7}, 24}};
    auto [cs, d] = items[range(0, 3)];
    return {rat(cs.first, d), rat(range(0, 1) ? cs.second : -cs.second, d)};
  }
  JordanElement<Rational> jordan(long max_num = 9, long max_den = 9) {
    JordanElement<Rational> X;
    for (int k = 0; k < 27; ++k) X.set_coord(k, rational(max_num, max_den));
    return X;
  }

  // One random element from the exact generator inventory.
  F4Operator<Rational> generator() {
    switch (range(0, 6)) {
      case 0:
        return phi0(triality_triple_LRT(unit(), static_cast<int>(range(0, 2))));
      case 1:
        return phi0(spin7_pair(unit(true), unit(true)));
      case 2: {
        const auto [c, s] = pyth_pair();
        return exp_rot(unit(), c, s);
      }
      case 3: {
        const auto [ch, sh] = hyper_pair();
        return exp_boost(static_cast<int>(range(1, 2)), unit(), ch, sh);
      }
      case 4:
        return sigma_op<Rational>(static_cast<int>(range(0, 2)));
      case 5:
        return exp_g(static_cast<int>(range(0, 1)) * 2 - 1, octonion(3, 3));
      default:
        return exp_g(range(0, 1) ? 2 : -2, imaginary(3, 3));
    }
  }
  F4Operator<Rational> word(int len) {
    F4Operator<Rational> g = F4Operator<Rational>::identity();
    for (int k = 0; k < len; ++k) g = compose(generator(), g);
    return g;
  }

 private:
  std::mt19937_64 eng_;
};

// Scramble X by a word of exact generators, rerolling until the image stays
// inside the given coordinate bound. Double-precision transport loses
// absolute accuracy past ~1e2-sized coordinates, so the float-path residual
// guarantees only bind on such inputs.
inline std::pair<F4Operator<Rational>, JordanElement<Rational>> bounded_scramble(
    Rng& rng, const JordanElement<Rational>& X, int len, double bound = 100.0) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    F4Operator<Rational> g = rng.word(len);
    JordanElement<Rational> Y = g.apply(X);
    if (jmax_abs(Y) <= bound) return {std::move(g), std::move(Y)};
  }
  return {F4Operator<Rational>::identity(), X};
}

}  // namespace albert::samples
