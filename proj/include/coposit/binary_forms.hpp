#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "sym_tensor.hpp"
#include "univariate.hpp"
#include "verdict.hpp"

namespace coposit {

/// Symmetric 2x2 matrix, one off-diagonal slot.
template <class S>
struct Matrix2 {
  S m11, m12, m22;
};

/// Coefficients of a 3rd-order 2-dimensional symmetric tensor.
template <class S>
struct Cubic2Coeffs {
  S t111, t112, t122, t222;
};

/// Coefficients of a 4th-order 2-dimensional symmetric tensor.
template <class S>
struct Quartic2Coeffs {
  S t1111, t1112, t1122, t1222, t2222;
};

inline Quartic2Coeffs<Rational> quartic2_from_tensor(const RationalTensor& T) {
  if (T.order() != 4 || T.dim() != 2)
    throw std::invalid_argument("quartic2_from_tensor needs an order-4 dimension-2 tensor");
  return {T.at({1, 1, 1, 1}), T.at({1, 1, 1, 2}), T.at({1, 1, 2, 2}), T.at({1, 2, 2, 2}),
          T.at({2, 2, 2, 2})};
}

inline RationalTensor quartic2_to_tensor(const Quartic2Coeffs<Rational>& Q) {
  return RationalTensor(4, 2,
                        {{{1, 1, 1, 1}, Q.t1111},
                         {{1, 1, 1, 2}, Q.t1112},
                         {{1, 1, 2, 2}, Q.t1122},
                         {{1, 2, 2, 2}, Q.t1222},
                         {{2, 2, 2, 2}, Q.t2222}});
}

/// The quartic restricted to x2 = 1: p(s) = t1111 s^4 + 4 t1112 s^3 + ...
inline Poly quartic2_halfline_poly(const Quartic2Coeffs<Rational>& Q) {
  return {Q.t2222, 4 * Q.t1222, 6 * Q.t1122, 4 * Q.t1112, Q.t1111};
}

/// m11 >= 0, m22 >= 0 and m12 + sqrt(m11 m22) >= 0, all strict when asked.
/// The radical comparison is resolved exactly by sign-aware squaring.
inline bool matrix2_copositive(const Matrix2<Rational>& M, bool strict) {
  const int d1 = sgn(M.m11);
  const int d2 = sgn(M.m22);
  if (strict ? (d1 <= 0 || d2 <= 0) : (d1 < 0 || d2 < 0)) return false;
  const int alpha = sign_with_radical(M.m12, Rational(1), M.m11 * M.m22);
  return strict ? alpha > 0 : alpha >= 0;
}

inline Trilean matrix2_copositive(const Matrix2<double>& M, bool strict,
                                  double rel_tol = 1e-12) {
  const double scale = std::abs(M.m11) + std::abs(M.m12) + std::abs(M.m22) + 1e-300;
  const auto banded = [&](double v) -> std::optional<int> {
    if (std::abs(v) <= rel_tol * scale) return std::nullopt;
    return sign_of(v);
  };
  auto check = [&](std::optional<int> s) -> Trilean {
    if (!s) return Trilean::Unknown;
    return to_trilean(strict ? *s > 0 : *s >= 0);
  };
  const auto alpha = sign_with_radical(M.m12, 1.0, M.m11 * M.m22, rel_tol);
  return tri_and(check(banded(M.m11)), tri_and(check(banded(M.m22)), check(alpha)));
}

namespace detail {
/// alpha s^2 + beta s + gamma >= 0 for all s >= 0.
inline bool quad_nonneg_halfline(const Rational& alpha, const Rational& beta,
                                 const Rational& gamma) {
  if (sgn(alpha) < 0 || sgn(gamma) < 0) return false;
  if (sgn(beta) >= 0) return true;
  return beta * beta <= 4 * alpha * gamma;
}
}  // namespace detail

/// Copositivity of the binary cubic t111 x^3 + 3 t112 x^2 y + 3 t122 x y^2 + t222 y^3.
/// With both diagonal entries positive this is the classical resultant-style
/// criterion 4 t111 t122^3 + 4 t112^3 t222 + t111^2 t222^2 - 6 t111 t112 t122 t222
/// - 3 t112^2 t122^2 >= 0; a zero diagonal entry degenerates the cubic, and the
/// deflated quadratic is decided directly (the resultant form over-accepts there,
/// e.g. (0, 0, -1, 1)).
inline bool cubic2_copositive(const Cubic2Coeffs<Rational>& C) {
  if (sgn(C.t111) < 0 || sgn(C.t222) < 0) return false;
  if (sgn(C.t112) >= 0 && sgn(C.t122) >= 0) return true;
  if (sgn(C.t111) > 0 && sgn(C.t222) > 0) {
    const Rational g = 4 * C.t111 * C.t122 * C.t122 * C.t122 +
                       4 * C.t112 * C.t112 * C.t112 * C.t222 +
                       C.t111 * C.t111 * C.t222 * C.t222 -
                       6 * C.t111 * C.t112 * C.t122 * C.t222 -
                       3 * C.t112 * C.t112 * C.t122 * C.t122;
    return sgn(g) >= 0;
  }
  if (sgn(C.t111) == 0) {
    // p(s) = 3 t112 s^2 + 3 t122 s + t222 on [0, inf)
    return detail::quad_nonneg_halfline(3 * C.t112, 3 * C.t122, C.t222);
  }
  // t222 == 0: p(s) = s (t111 s^2 + 3 t112 s + 3 t122)
  return detail::quad_nonneg_halfline(C.t111, 3 * C.t112, 3 * C.t122);
}

/// Discriminant-style invariant whose sign splits the quartic case analysis:
/// 4*12^3 (t1111 t2222 - 4 t1112 t1222 + 3 t1122^2)^3
///   - 72^2*6^2 (t1111 t1122 t2222 + 2 t1112 t1122 t1222 - t1122^3
///               - t1112^2 t2222 - t1111 t1222^2)^2.
template <class S>
S quartic2_discriminant(const Quartic2Coeffs<S>& Q) {
  const S& a = Q.t1111;
  const S& b = Q.t1112;
  const S& c = Q.t1122;
  const S& d = Q.t1222;
  const S& e = Q.t2222;
  const S i_inv = a * e - 4 * b * d + 3 * c * c;
  const S j_inv = a * c * e + 2 * b * c * d - c * c * c - b * b * e - a * d * d;
  return S(6912) * i_inv * i_inv * i_inv - S(186624) * j_inv * j_inv;
}

/// Copositivity of a binary quartic with positive diagonal, decided by the
/// analytic case split on the discriminant. Every irrational comparison is
/// resolved by exact sign-case squaring.
///
/// The first case keeps the strict "> 0" on t1222 sqrt(t1111) + t1112 sqrt(t2222):
/// with a negative discriminant the two real roots of the restriction share a
/// sign and the boundary value 0 cannot occur; discriminant-zero boundary
/// instances that are copositive are picked up by the other two cases. This
/// convention is pinned by the exhaustive oracle cross-checks in the tests.
inline bool quartic2_copositive(const Quartic2Coeffs<Rational>& Q) {
  const Rational& a = Q.t1111;
  const Rational& b = Q.t1112;
  const Rational& c = Q.t1122;
  const Rational& d = Q.t1222;
  const Rational& e = Q.t2222;
  if (sgn(a) <= 0)
    throw std::invalid_argument("quartic2_copositive requires t1111 > 0 (got " + to_string(a) +
                                ")");
  if (sgn(e) <= 0)
    throw std::invalid_argument("quartic2_copositive requires t2222 > 0 (got " + to_string(e) +
                                ")");

  const Rational delta = quartic2_discriminant(Q);
  const Rational ae = a * e;

  // delta <= 0 and t1222 sqrt(t1111) + t1112 sqrt(t2222) > 0
  if (sgn(delta) <= 0 && sign_of_sqrt_pair(d, a, b, e) > 0) return true;

  // t1222 >= 0, t1112 >= 0, 3 t1122 + sqrt(t1111 t2222) >= 0
  if (sgn(d) >= 0 && sgn(b) >= 0 && sign_with_radical(3 * c, Rational(1), ae) >= 0) return true;

  // delta >= 0 with the two-sided bound
  //   |t1112 sqrt(t2222) - t1222 sqrt(t1111)| <= sqrt(6 t1111 t1122 t2222
  //                                      + 2 t1111 t2222 sqrt(t1111 t2222))
  // and one of the t1122 windows.
  if (sgn(delta) >= 0) {
    const Rational six_ace = 6 * a * c * e;
    if (sign_with_radical(six_ace, 2 * ae, ae) >= 0) {
      const Rational lhs_sq_core = b * b * e + d * d * a - six_ace;
      if (sign_with_radical(lhs_sq_core, -(2 * b * d + 2 * ae), ae) <= 0) {
        // (i) -sqrt(ae) <= 3 t1122 <= 3 sqrt(ae)
        if (sign_with_radical(3 * c, Rational(1), ae) >= 0 &&
            sign_with_radical(c, Rational(-1), ae) <= 0)
          return true;
        // (ii) t1122 > sqrt(ae) and
        //      t1112 sqrt(t2222) + t1222 sqrt(t1111) >= -sqrt(6ace - 2ae sqrt(ae))
        if (sign_with_radical(c, Rational(-1), ae) > 0) {
          if (sign_of_sqrt_pair(b, e, d, a) >= 0) return true;
          if (sign_with_radical(lhs_sq_core, 2 * b * d + 2 * ae, ae) <= 0) return true;
        }
      }
    }
  }
  return false;
}

/// Float-mode variant: comparisons within a relative tolerance band of a case
/// boundary return Unknown instead of guessing.
inline Trilean quartic2_copositive(const Quartic2Coeffs<double>& Q, double rel_tol = 1e-12) {
  const double a = Q.t1111, b = Q.t1112, c = Q.t1122, d = Q.t1222, e = Q.t2222;
  if (!(a > 0.0))
    throw std::invalid_argument("quartic2_copositive requires t1111 > 0");
  if (!(e > 0.0))
    throw std::invalid_argument("quartic2_copositive requires t2222 > 0");
  const double ae = a * e;
  const double delta = quartic2_discriminant(Q);
  const auto banded = [&](double v, double scale) -> std::optional<int> {
    if (std::abs(v) <= rel_tol * (scale + 1e-300)) return std::nullopt;
    return sign_of(v);
  };
  const auto ge = [](std::optional<int> s) {
    return s ? to_trilean(*s >= 0) : Trilean::Unknown;
  };
  const auto le = [](std::optional<int> s) {
    return s ? to_trilean(*s <= 0) : Trilean::Unknown;
  };
  const auto gt = [](std::optional<int> s) {
    return s ? to_trilean(*s > 0) : Trilean::Unknown;
  };

  const auto delta_sign = banded(delta, 6912.0 * std::pow(std::abs(ae) + b * b + c * c + d * d, 3));
  const auto alpha = sign_of_sqrt_pair(d, a, b, e, rel_tol);
  Trilean group_a = tri_and(le(delta_sign), gt(alpha));

  Trilean group_b = tri_and(to_trilean(d >= 0.0 && b >= 0.0),
                            ge(sign_with_radical(3 * c, 1.0, ae, rel_tol)));

  const double six_ace = 6 * a * c * e;
  const double lhs_sq_core = b * b * e + d * d * a - six_ace;
  Trilean bound = tri_and(ge(sign_with_radical(six_ace, 2 * ae, ae, rel_tol)),
                          le(sign_with_radical(lhs_sq_core, -(2 * b * d + 2 * ae), ae, rel_tol)));
  Trilean window_i = tri_and(ge(sign_with_radical(3 * c, 1.0, ae, rel_tol)),
                             le(sign_with_radical(c, -1.0, ae, rel_tol)));
  Trilean window_ii =
      tri_and(gt(sign_with_radical(c, -1.0, ae, rel_tol)),
              tri_or(ge(sign_of_sqrt_pair(b, e, d, a, rel_tol)),
                     le(sign_with_radical(lhs_sq_core, 2 * b * d + 2 * ae, ae, rel_tol))));
  Trilean group_c =
      tri_and(ge(delta_sign), tri_and(bound, tri_or(window_i, window_ii)));

  return tri_or(group_a, tri_or(group_b, group_c));
}

/// Strictness verdict for a binary quartic, exact mode only.
struct Quartic2Strictness {
  Verdict verdict;
  std::optional<Witness<Rational>> witness;
};

namespace detail {
inline std::vector<Rational> point_from_slope(const Rational& s) {
  // (s, 1) cleared to integers
  return {Rational(s.get_num()), Rational(s.get_den())};
}
}  // namespace detail

/// Full three-way classification: the copositivity bit comes from the analytic
/// case split (diagonal degeneracies handled directly), strictness from exact
/// root counting of the restriction p(s) on [0, infinity).
inline Quartic2Strictness quartic2_strict(const Quartic2Coeffs<Rational>& Q) {
  const RationalTensor T = quartic2_to_tensor(Q);
  const auto analysis = analyze_halfline(quartic2_halfline_poly(Q));

  const auto negative = [&]() -> Quartic2Strictness {
    std::optional<Witness<Rational>> w;
    if (sgn(Q.t1111) < 0) {
      w = make_witness(T, {Rational(1), Rational(0)});
    } else if (analysis.negative_point) {
      w = make_witness(T, detail::point_from_slope(*analysis.negative_point));
    }
    return {Verdict::NotCopositive, std::move(w)};
  };

  if (sgn(Q.t1111) < 0 || sgn(Q.t2222) < 0) return negative();

  if (sgn(Q.t1111) == 0 || sgn(Q.t2222) == 0) {
    // Zero diagonal: never strict; decide copositivity from the restriction
    // plus the x2 = 0 vertex.
    if (!analysis.nonneg) return negative();
    std::vector<Rational> zero_x = sgn(Q.t1111) == 0
                                       ? std::vector<Rational>{Rational(1), Rational(0)}
                                       : std::vector<Rational>{Rational(0), Rational(1)};
    return {Verdict::CopositiveNotStrict, make_witness(T, std::move(zero_x))};
  }

  if (!quartic2_copositive(Q)) return negative();

  if (analysis.positive) return {Verdict::StrictlyCopositive, std::nullopt};

  std::optional<Witness<Rational>> w;
  if (analysis.zero_point) w = make_witness(T, detail::point_from_slope(*analysis.zero_point));
  return {Verdict::CopositiveNotStrict, std::move(w)};
}

inline Quartic2Strictness quartic2_strict(const Quartic2Coeffs<double>&) {
  throw std::logic_error(
      "quartic2_strict supports exact mode only; use the simplex oracle for float tensors");
}

}  // namespace coposit
