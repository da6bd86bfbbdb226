#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "albert/errors.hpp"

namespace albert {

// Exact scalar backend. GMP keeps mpq_t canonical (gcd(num,den)=1, den>0),
// which is exactly the normalization the rest of the library relies on.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& q) { return BigInt(boost::multiprecision::numerator(q)); }
inline BigInt denominator(const Rational& q) { return BigInt(boost::multiprecision::denominator(q)); }

template <class S>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
  static constexpr bool exact = true;
  static Rational from_int(long n) { return Rational(n); }
  static Rational from_ratio(long p, long q) { return Rational(p) / q; }
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static int sign(const Rational& v) { return v.sign(); }
  static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
  // Exact square root: succeeds only on perfect squares of rationals.
  static std::optional<Rational> try_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    if (v.is_zero()) return Rational(0);
    BigInt n = numerator(v), d = denominator(v);
    BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn) / Rational(rd);
  }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static std::string str(const Rational& v) {
    std::ostringstream os;
    os << numerator(v);
    if (denominator(v) != 1) os << "/" << denominator(v);
    return os.str();
  }
  static Rational parse(const std::string& s) {
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) {
        if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
            s.find('E') != std::string::npos)
          throw ParseError("decimal literal in exact scalar position: " + s);
        return Rational(BigInt(s));
      }
      BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
      if (q == 0) throw ParseError("zero denominator: " + s);
      return Rational(p) / Rational(q);
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad rational '") + s + "': " + e.what());
    }
  }
};

template <>
struct scalar_ops<double> {
  static constexpr bool exact = false;
  // Module-level comparison tolerance for the float backend.
  static constexpr double tol = 1e-9;
  static double from_int(long n) { return static_cast<double>(n); }
  static double from_ratio(long p, long q) { return static_cast<double>(p) / static_cast<double>(q); }
  static bool is_zero(double v) { return std::fabs(v) < tol; }
  static int sign(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
  static double abs(double v) { return std::fabs(v); }
  static std::optional<double> try_sqrt(double v) {
    if (v < -tol) return std::nullopt;
    return std::sqrt(v < 0 ? 0.0 : v);
  }
  static double to_double(double v) { return v; }
  static std::string str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  static double parse(const std::string& s) {
    try {
      auto slash = s.find('/');
      if (slash != std::string::npos)
        return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
      std::size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos != s.size()) throw ParseError("trailing characters in number: " + s);
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad number '") + s + "': " + e.what());
    }
  }
};

template <class S>
double to_double(const S& v) {
  return scalar_ops<S>::to_double(v);
}

inline Rational rat(long p, long q = 1) { return scalar_ops<Rational>::from_ratio(p, q); }

}  // namespace albert
