#ifndef LIEGEO_SCALAR_HPP
#define LIEGEO_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "liegeo/errors.hpp"

namespace liegeo {

/// Exact scalar: arbitrary-precision rational, kept canonical.
using Rational = mpq_class;

/// Default absolute tolerance for float-mode comparisons.
inline constexpr double kDefaultEpsilon = 1e-12;

/// Uniform scalar operations for the two arithmetic modes. Every engine
/// object is templated on the scalar type; the mode is fixed when the
/// engine is instantiated, never per call.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";

  // eps is accepted for interface parity and ignored: exact comparisons.
  static bool is_zero(const Rational& x, double /*eps*/ = 0.0) {
    return sgn(x) == 0;
  }

  static Rational sqrt(const Rational& x) {
    if (sgn(x) < 0) throw NonPerfectSquare("sqrt of negative rational");
    const mpz_class num = x.get_num();
    const mpz_class den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
      throw NonPerfectSquare("sqrt of " + x.get_str() +
                             " is irrational; exact mode needs a perfect square");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn) / Rational(rd);
  }

  static std::string str(const Rational& x) { return x.get_str(); }

  // Accepts "p", "p/q", decimal literals like "-0.25", and a leading sign.
  static Rational parse(const std::string& text) {
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const std::size_t frac_digits = text.size() - dot - 1;
      if (frac_digits == 0 || digits.empty() ||
          digits.find_first_of("./") != std::string::npos)
        throw ParseError("not a rational: '" + text + "'");
      Rational num = parse(digits);
      Rational den(1);
      for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
      num /= den;
      return num;
    }
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
      throw ParseError("not a rational: '" + text + "'");
    if (sgn(mpq_class(r.get_den())) == 0)
      throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }

  static double to_double(const Rational& x) { return x.get_d(); }

  static Rational from_fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";

  static bool is_zero(double x, double eps = kDefaultEpsilon) {
    return std::fabs(x) <= eps;
  }

  static double sqrt(double x) { return std::sqrt(x); }

  // 17 significant digits: lossless textual round-trip for IEEE doubles.
  static std::string str(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }

  // Accepts decimal literals and "p/q" fraction strings.
  static double parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const Rational r = scalar_traits<Rational>::parse(text);
      return r.get_d();
    }
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw ParseError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw ParseError("not a number: '" + text + "'");
    return v;
  }

  static double to_double(double x) { return x; }

  static double from_fraction(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

template <class S>
S scalar_from_fraction(long num, long den = 1) {
  return scalar_traits<S>::from_fraction(num, den);
}

}  // namespace liegeo

#endif
