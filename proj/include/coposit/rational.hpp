#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace coposit {

/// Exact arbitrary-precision rational scalar. All deciders that promise
/// exact answers run on this type; `double` is the approximate mode.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

inline double to_double(const Rational& x) { return x.get_d(); }

/// Parses "p", "-p" or "p/q" with integer p, q and q != 0.
inline Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t after_num = digits(i);
  if (after_num == i) throw std::invalid_argument("not a rational literal: '" + text + "'");
  if (after_num < text.size()) {
    if (text[after_num] != '/') throw std::invalid_argument("not a rational literal: '" + text + "'");
    std::size_t after_den = digits(after_num + 1);
    if (after_den == after_num + 1 || after_den != text.size())
      throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
  Rational r(text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

/// "p/q" for non-integers, plain "p" otherwise.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// If x is the square of a rational, returns that (nonnegative) square root.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

/// Exact sign of p + q*sqrt(r) for rational p, q and r >= 0.
/// Square-root comparisons are resolved by sign analysis plus squaring;
/// no irrational arithmetic is performed.
inline int sign_with_radical(const Rational& p, const Rational& q, const Rational& r) {
  if (sgn(r) < 0) throw std::invalid_argument("sign_with_radical: negative radicand");
  const int radical_sign = (sgn(r) == 0) ? 0 : sgn(q);
  if (radical_sign == 0) return sgn(p);
  if (sgn(p) == 0) return radical_sign;
  if (sgn(p) == radical_sign) return sgn(p);
  // Opposite signs: |p| vs |q|*sqrt(r), square both sides.
  const int c = cmp(p * p, q * q * r);
  if (c == 0) return 0;
  return c > 0 ? sgn(p) : radical_sign;
}

/// Exact sign of u*sqrt(A) + v*sqrt(B) for A, B >= 0.
inline int sign_of_sqrt_pair(const Rational& u, const Rational& A, const Rational& v,
                             const Rational& B) {
  if (sgn(A) < 0 || sgn(B) < 0) throw std::invalid_argument("sign_of_sqrt_pair: negative radicand");
  const int s1 = (sgn(A) == 0) ? 0 : sgn(u);
  const int s2 = (sgn(B) == 0) ? 0 : sgn(v);
  if (s1 == 0) return s2;
  if (s2 == 0) return s1;
  if (s1 == s2) return s1;
  const int c = cmp(u * u * A, v * v * B);
  if (c == 0) return 0;
  return c > 0 ? s1 : s2;
}

/// Three-valued answer for float-mode boundary comparisons.
enum class Trilean { False, True, Unknown };

inline Trilean to_trilean(bool b) { return b ? Trilean::True : Trilean::False; }

inline Trilean tri_and(Trilean a, Trilean b) {
  if (a == Trilean::False || b == Trilean::False) return Trilean::False;
  if (a == Trilean::True && b == Trilean::True) return Trilean::True;
  return Trilean::Unknown;
}

inline Trilean tri_or(Trilean a, Trilean b) {
  if (a == Trilean::True || b == Trilean::True) return Trilean::True;
  if (a == Trilean::False && b == Trilean::False) return Trilean::False;
  return Trilean::Unknown;
}

/// Float-mode sign of p + q*sqrt(max(r,0)) with a relative tolerance band.
/// nullopt means the value is too close to the boundary to call.
inline std::optional<int> sign_with_radical(double p, double q, double r, double rel_tol) {
  const double root = std::sqrt(std::max(r, 0.0));
  const double value = p + q * root;
  const double scale = std::abs(p) + std::abs(q) * root + 1e-300;
  if (std::abs(value) <= rel_tol * scale) return std::nullopt;
  return sign_of(value);
}

inline std::optional<int> sign_of_sqrt_pair(double u, double A, double v, double B,
                                            double rel_tol) {
  const double value = u * std::sqrt(std::max(A, 0.0)) + v * std::sqrt(std::max(B, 0.0));
  const double scale =
      std::abs(u) * std::sqrt(std::abs(A)) + std::abs(v) * std::sqrt(std::abs(B)) + 1e-300;
  if (std::abs(value) <= rel_tol * scale) return std::nullopt;
  return sign_of(value);
}

}  // namespace coposit
