#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "binary_forms.hpp"
#include "rational.hpp"
#include "simplex_oracle.hpp"
#include "sym_tensor.hpp"
#include "univariate.hpp"
#include "verdict.hpp"

namespace coposit {

/// 4th-order 2-dimensional tensor with entries in {-1, 0, 1}.
struct SignTensor4x2 {
  int t1111, t1112, t1122, t1222, t2222;

  static std::optional<SignTensor4x2> from_tensor(const RationalTensor& T);
  RationalTensor to_tensor() const {
    return RationalTensor(4, 2,
                          {{{1, 1, 1, 1}, Rational(t1111)},
                           {{1, 1, 1, 2}, Rational(t1112)},
                           {{1, 1, 2, 2}, Rational(t1122)},
                           {{1, 2, 2, 2}, Rational(t1222)},
                           {{2, 2, 2, 2}, Rational(t2222)}});
  }
};

/// The 15 canonical slots of a 4th-order 3-dimensional tensor, each in {-1,0,1}.
struct SignTensor4x3 {
  std::array<int, 15> slots{};  // canonical indices in ascending lex order

  static const std::vector<MultiIndex>& slot_indices() {
    static const std::vector<MultiIndex> idx = canonical_indices(4, 3);
    return idx;
  }

  int at(MultiIndex idx) const {
    idx = canonicalized(std::move(idx), 3);
    const auto& all = slot_indices();
    for (std::size_t p = 0; p < all.size(); ++p)
      if (all[p] == idx) return slots[p];
    throw std::logic_error("unreachable: canonical slot not found");
  }
  int at(int i, int j, int k, int l) const { return at(MultiIndex{i, j, k, l}); }

  int diag(int i) const { return at(i, i, i, i); }
  int near_diag(int i, int j) const { return at(i, i, i, j); }  // t_{iiij}
  int pair_square(int i, int j) const { return at(i, i, j, j); }
  int mixed(int i, int j, int k) const { return at(i, i, j, k); }  // t_{iijk}, j < k

  static std::optional<SignTensor4x3> from_tensor(const RationalTensor& T);
  RationalTensor to_tensor() const {
    std::vector<RationalTensor::Entry> entries;
    const auto& all = slot_indices();
    for (std::size_t p = 0; p < all.size(); ++p)
      entries.emplace_back(all[p], Rational(slots[p]));
    return RationalTensor(4, 3, entries);
  }
};

inline std::optional<SignTensor4x2> SignTensor4x2::from_tensor(const RationalTensor& T) {
  if (T.order() != 4 || T.dim() != 2) return std::nullopt;
  const auto get = [&](std::initializer_list<int> idx) -> std::optional<int> {
    const Rational v = T.at(idx);
    if (!is_integral(v)) return std::nullopt;
    const long c = static_cast<long>(v.get_num().get_si());
    if (c < -1 || c > 1) return std::nullopt;
    return static_cast<int>(c);
  };
  SignTensor4x2 out{};
  const auto a = get({1, 1, 1, 1}), b = get({1, 1, 1, 2}), c = get({1, 1, 2, 2}),
             d = get({1, 2, 2, 2}), e = get({2, 2, 2, 2});
  if (!a || !b || !c || !d || !e) return std::nullopt;
  out.t1111 = *a;
  out.t1112 = *b;
  out.t1122 = *c;
  out.t1222 = *d;
  out.t2222 = *e;
  return out;
}

inline std::optional<SignTensor4x3> SignTensor4x3::from_tensor(const RationalTensor& T) {
  if (T.order() != 4 || T.dim() != 3) return std::nullopt;
  SignTensor4x3 out{};
  const auto& all = slot_indices();
  for (std::size_t p = 0; p < all.size(); ++p) {
    const Rational v = T.at(all[p]);
    if (!is_integral(v)) return std::nullopt;
    const long c = static_cast<long>(v.get_num().get_si());
    if (c < -1 || c > 1) return std::nullopt;
    out.slots[p] = static_cast<int>(c);
  }
  return out;
}

namespace detail {

inline void check_sign_entry(int v, const char* slot) {
  if (v < -1 || v > 1)
    throw std::invalid_argument(std::string("sign tensor entry ") + slot +
                                " must lie in {-1,0,1}");
}

inline bool in01(int v) { return v == 0 || v == 1; }

/// The copositivity table over the diagonal pattern (t1111, t2222) in {0,1}^2.
/// The mixed-diagonal rows come from the binary-cubic criterion applied to
/// the deflated restriction (the factored-out variable contributes a zero);
/// their exact shape is pinned by exhaustive oracle agreement over all 243
/// sign patterns.
inline bool sign2d_copositive_table(const SignTensor4x2& T) {
  const int a = T.t1111, b = T.t1112, c = T.t1122, d = T.t1222, e = T.t2222;
  if (a == -1 || e == -1) return false;
  if (a == 1 && e == 0)
    return (in01(b) && in01(c) && in01(d)) || (d == 0 && c == 1 && b == -1) ||
           (d == 1 && b * c == -1);
  if (a == 0 && e == 1)
    return (in01(b) && in01(c) && in01(d)) || (b == 0 && c == 1 && d == -1) ||
           (b == 1 && c * d == -1);
  if (a == 0 && e == 0) return (in01(b) && in01(c) && in01(d)) || (b == 1 && d == 1 && c == -1);
  // a == e == 1
  return (c == 0 && in01(b) && in01(d)) || c == 1 || (b == 1 && d == 1);
}

inline bool sign2d_strict_table(const SignTensor4x2& T) {
  const int b = T.t1112, c = T.t1122, d = T.t1222;
  if (T.t1111 != 1 || T.t2222 != 1) return false;
  return (c == 0 && in01(b) && in01(d)) || (b == 1 && d == 1) ||
         ((b * d == 0 || b * d == -1) && c == 1);
}

}  // namespace detail

/// Full three-way table for sign binary quartics. Rejections and zero
/// witnesses are backed by exact points on the restriction.
inline ClassifierReport<Rational> classify_sign_2d(const SignTensor4x2& T) {
  detail::check_sign_entry(T.t1111, "t1111");
  detail::check_sign_entry(T.t1112, "t1112");
  detail::check_sign_entry(T.t1122, "t1122");
  detail::check_sign_entry(T.t1222, "t1222");
  detail::check_sign_entry(T.t2222, "t2222");

  ClassifierReport<Rational> report;
  report.applicable = true;
  report.rule = "lemma25";
  report.decisive = true;

  const RationalTensor full = T.to_tensor();
  if (!detail::sign2d_copositive_table(T)) {
    report.verdict = Verdict::NotCopositive;
    const auto analysis = analyze_halfline(quartic2_halfline_poly(quartic2_from_tensor(full)));
    if (T.t1111 < 0)
      report.evidence = make_witness(full, {Rational(1), Rational(0)});
    else if (analysis.negative_point)
      report.evidence =
          make_witness(full, {Rational(analysis.negative_point->get_num()),
                              Rational(analysis.negative_point->get_den())});
    return report;
  }
  if (detail::sign2d_strict_table(T)) {
    report.verdict = Verdict::StrictlyCopositive;
    return report;
  }
  report.verdict = Verdict::CopositiveNotStrict;
  if (T.t1111 == 0) {
    report.evidence = make_witness(full, {Rational(1), Rational(0)});
  } else if (T.t2222 == 0) {
    report.evidence = make_witness(full, {Rational(0), Rational(1)});
  } else {
    const auto analysis = analyze_halfline(quartic2_halfline_poly(quartic2_from_tensor(full)));
    if (analysis.zero_point)
      report.evidence = make_witness(full, {Rational(analysis.zero_point->get_num()),
                                            Rational(analysis.zero_point->get_den())});
  }
  return report;
}

/// Strictness for binary quartics with all entries of absolute value one:
/// t1111 = t2222 = 1 and either both near-diagonal entries are 1, or they
/// have opposite signs and t1122 = 1.
inline bool strict_sign_2d_allones(const SignTensor4x2& T) {
  const auto check = [](int v, const char* slot) {
    if (v != 1 && v != -1)
      throw std::invalid_argument(std::string("entry ") + slot +
                                  " must be +1 or -1 for the all-ones rule");
  };
  check(T.t1111, "t1111");
  check(T.t1112, "t1112");
  check(T.t1122, "t1122");
  check(T.t1222, "t1222");
  check(T.t2222, "t2222");
  if (T.t1111 != 1 || T.t2222 != 1) return false;
  return (T.t1112 == 1 && T.t1222 == 1) || (T.t1112 * T.t1222 == -1 && T.t1122 == 1);
}

namespace detail {

inline ClassifierReport<Rational> not_applicable() { return {}; }

/// The three (i,j,k) rotations with j < k: the mixed slot t_{iijk} against the
/// two near-diagonal slots t_{iiij}, t_{iiik}.
constexpr std::array<std::array<int, 3>, 3> kRotations{{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}};

}  // namespace detail

/// Family with |entries| = 1, unit diagonal and square pairs, and opposite
/// near-diagonal pairs t_{iiij} t_{ijjj} = -1. Strict copositivity holds iff
/// some mixed slot is +1 and every rotation with t_{iijk} = -1 keeps
/// t_{iiij} + t_{iiik} >= 0; otherwise the tensor is not copositive at all,
/// witnessed at (1,1,1) or a permutation of (3,1,1).
inline ClassifierReport<Rational> thm32_decide(const SignTensor4x3& T) {
  for (int v : T.slots)
    if (v != 1 && v != -1) return detail::not_applicable();
  for (int i = 1; i <= 3; ++i)
    if (T.diag(i) != 1) return detail::not_applicable();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j && T.pair_square(i, j) != 1) return detail::not_applicable();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j && T.near_diag(i, j) * T.near_diag(j, i) != -1) return detail::not_applicable();

  ClassifierReport<Rational> report;
  report.applicable = true;
  report.rule = "thm32";
  report.decisive = true;

  const int m1 = T.mixed(1, 2, 3), m2 = T.mixed(2, 1, 3), m3 = T.mixed(3, 1, 2);
  const bool has_positive = (m1 == 1) || (m2 == 1) || (m3 == 1);
  int violating_rotation = 0;
  for (const auto& rot : detail::kRotations) {
    const int i = rot[0], j = rot[1], k = rot[2];
    if (T.mixed(i, j, k) == -1 && T.near_diag(i, j) + T.near_diag(i, k) < 0) {
      violating_rotation = i;
      break;
    }
  }
  if (has_positive && violating_rotation == 0) {
    report.verdict = Verdict::StrictlyCopositive;
    return report;
  }
  report.verdict = Verdict::NotCopositive;
  const RationalTensor full = T.to_tensor();
  if (!has_positive) {
    report.evidence = make_witness(full, {Rational(1), Rational(1), Rational(1)});
  } else {
    std::vector<Rational> x(3, Rational(1));
    x[static_cast<std::size_t>(violating_rotation - 1)] = Rational(3);
    report.evidence = make_witness(full, std::move(x));
  }
  return report;
}

/// Family with unit diagonal and near-diagonals, square pairs all -1:
/// strictly copositive iff t1123 + t1223 + t1233 >= 0, otherwise the value at
/// (1,1,1) is already negative.
inline ClassifierReport<Rational> thm33_decide(const SignTensor4x3& T) {
  for (int i = 1; i <= 3; ++i)
    if (T.diag(i) != 1) return detail::not_applicable();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      if (T.near_diag(i, j) != 1) return detail::not_applicable();
      if (T.pair_square(i, j) != -1) return detail::not_applicable();
    }

  ClassifierReport<Rational> report;
  report.applicable = true;
  report.rule = "thm33";
  report.decisive = true;
  const int sum = T.mixed(1, 2, 3) + T.mixed(2, 1, 3) + T.mixed(3, 1, 2);
  if (sum >= 0) {
    report.verdict = Verdict::StrictlyCopositive;
  } else {
    report.verdict = Verdict::NotCopositive;
    report.evidence = make_witness(T.to_tensor(), {Rational(1), Rational(1), Rational(1)});
  }
  return report;
}

/// Sufficient-only variant of the previous rule with free square pairs:
/// a nonnegative mixed-slot sum certifies strict copositivity, anything else
/// is left open (verdict unset).
inline ClassifierReport<Rational> cor34_sufficient(const SignTensor4x3& T) {
  for (int i = 1; i <= 3; ++i)
    if (T.diag(i) != 1) return detail::not_applicable();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j && T.near_diag(i, j) != 1) return detail::not_applicable();

  ClassifierReport<Rational> report;
  report.applicable = true;
  report.rule = "cor34";
  report.decisive = true;
  const int sum = T.mixed(1, 2, 3) + T.mixed(2, 1, 3) + T.mixed(3, 1, 2);
  if (sum >= 0) report.verdict = Verdict::StrictlyCopositive;
  return report;
}

/// Entry-bound sufficient rule for arbitrary real entries: diagonal and
/// near-diagonal at least 1, square pairs at least -1, mixed slots
/// nonnegative.
inline ClassifierReport<Rational> cor35_sufficient(const RationalTensor& T) {
  if (T.order() != 4 || T.dim() != 3) return detail::not_applicable();
  ClassifierReport<Rational> report;
  report.applicable = true;
  report.rule = "cor35";
  report.decisive = true;
  const Rational one(1), minus_one(-1), zero(0);
  for (int i = 1; i <= 3; ++i)
    if (T.at({i, i, i, i}) < one) return report;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      if (T.at({i, i, i, j}) < one) return report;
      if (T.at({i, i, j, j}) < minus_one) return report;
    }
  if (T.at({1, 1, 2, 3}) < zero || T.at({1, 2, 2, 3}) < zero || T.at({1, 2, 3, 3}) < zero)
    return report;
  report.verdict = Verdict::StrictlyCopositive;
  return report;
}

/// Family with unit diagonal and near-diagonals and all mixed slots -1:
/// strictly copositive iff every square pair is in {0,1} and at least two of
/// them equal 1; otherwise (1,1,1) evaluates negative.
inline ClassifierReport<Rational> thm36_decide(const SignTensor4x3& T) {
  for (int i = 1; i <= 3; ++i)
    if (T.diag(i) != 1) return detail::not_applicable();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j && T.near_diag(i, j) != 1) return detail::not_applicable();
  if (T.mixed(1, 2, 3) != -1 || T.mixed(2, 1, 3) != -1 || T.mixed(3, 1, 2) != -1)
    return detail::not_applicable();

  ClassifierReport<Rational> report;
  report.applicable = true;
  report.rule = "thm36";
  report.decisive = true;
  const int p = T.pair_square(1, 2), q = T.pair_square(1, 3), r = T.pair_square(2, 3);
  int ones = (p == 1) + (q == 1) + (r == 1);
  const bool all01 = detail::in01(p) && detail::in01(q) && detail::in01(r);
  if (all01 && ones >= 2) {
    report.verdict = Verdict::StrictlyCopositive;
  } else {
    report.verdict = Verdict::NotCopositive;
    report.evidence = make_witness(T.to_tensor(), {Rational(1), Rational(1), Rational(1)});
  }
  return report;
}

namespace detail {

/// Exact copositivity of a dim-2 rational quartic including degenerate
/// diagonals, by the restriction's half-line sign portrait. Used for the
/// principal-subtensor screen, independent of the analytic case split.
inline bool exact_quartic2_copositive(const RationalTensor& T) {
  if (sgn(T.at({1, 1, 1, 1})) < 0 || sgn(T.at({2, 2, 2, 2})) < 0) return false;
  return analyze_halfline(quartic2_halfline_poly(quartic2_from_tensor(T))).nonneg;
}

}  // namespace detail

/// Applies the analytic rules in order of decreasing authority and falls back
/// to the lattice oracle. The report names the first rule that decided.
inline ClassifierReport<Rational> dispatch(const RationalTensor& T,
                                           const OracleOptions& opts = {}) {
  if (T.order() != 4 || (T.dim() != 2 && T.dim() != 3))
    throw std::invalid_argument("dispatch supports order-4 tensors of dimension 2 or 3");

  // Zero-diagonal prefilter: rejects before any oracle work.
  if (const auto violation = zero_diagonal_filter(T)) {
    ClassifierReport<Rational> report;
    report.applicable = true;
    report.rule = "lemma21";
    report.decisive = true;
    report.verdict = Verdict::NotCopositive;
    // A negative value exists along the (i, j) edge; walk out until found.
    std::vector<Rational> x(static_cast<std::size_t>(T.dim()), Rational(0));
    x[static_cast<std::size_t>(violation->offdiag_label - 1)] = Rational(1);
    for (long long m = 1; m <= (1LL << 40); m *= 2) {
      x[static_cast<std::size_t>(violation->diag_label - 1)] = Rational(static_cast<long>(m));
      if (sgn(T.evaluate(x)) < 0) break;
    }
    report.evidence = make_witness(T, std::move(x));
    return report;
  }

  // Negative diagonal entries reject immediately at a vertex.
  for (int i = 1; i <= T.dim(); ++i) {
    if (sgn(T.at(MultiIndex(4, i))) < 0) {
      ClassifierReport<Rational> report;
      report.applicable = true;
      report.rule = "diagonal";
      report.decisive = true;
      report.verdict = Verdict::NotCopositive;
      std::vector<Rational> e(static_cast<std::size_t>(T.dim()), Rational(0));
      e[static_cast<std::size_t>(i - 1)] = Rational(1);
      report.evidence = make_witness(T, std::move(e));
      return report;
    }
  }

  if (T.dim() == 2) {
    if (const auto sign2 = SignTensor4x2::from_tensor(T)) {
      const bool allones = sign2->t1111 != 0 && sign2->t1112 != 0 && sign2->t1122 != 0 &&
                           sign2->t1222 != 0 && sign2->t2222 != 0;
      if (allones && strict_sign_2d_allones(*sign2)) {
        ClassifierReport<Rational> report;
        report.applicable = true;
        report.rule = "lemma26";
        report.decisive = true;
        report.verdict = Verdict::StrictlyCopositive;
        return report;
      }
      return classify_sign_2d(*sign2);
    }
    if (sgn(T.at({1, 1, 1, 1})) > 0 && sgn(T.at({2, 2, 2, 2})) > 0) {
      const auto result = quartic2_strict(quartic2_from_tensor(T));
      ClassifierReport<Rational> report;
      report.applicable = true;
      report.rule = "lemma23";
      report.decisive = true;
      report.verdict = result.verdict;
      report.evidence = result.witness;
      return report;
    }
    // Zero diagonal without a sign pattern: no analytic rule applies.
  } else {
    if (const auto sign3 = SignTensor4x3::from_tensor(T)) {
      for (auto* rule : {&thm32_decide, &thm33_decide, &thm36_decide}) {
        auto report = (*rule)(*sign3);
        if (report.applicable) return report;
      }
      auto c35 = cor35_sufficient(T);
      if (c35.applicable && c35.verdict) return c35;
      auto c34 = cor34_sufficient(*sign3);
      if (c34.applicable && c34.verdict) return c34;
    } else {
      auto c35 = cor35_sufficient(T);
      if (c35.applicable && c35.verdict) return c35;
    }
    // Necessary screen: a strictly negative principal binary quartic sinks
    // the whole tensor.
    const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
    for (const auto& [i, j] : pairs) {
      const RationalTensor sub = T.principal({i, j});
      if (!detail::exact_quartic2_copositive(sub)) {
        ClassifierReport<Rational> report;
        report.applicable = true;
        report.rule = "subtensor";
        report.decisive = true;
        report.verdict = Verdict::NotCopositive;
        const auto analysis = analyze_halfline(quartic2_halfline_poly(quartic2_from_tensor(sub)));
        std::vector<Rational> x(3, Rational(0));
        if (sgn(sub.at({1, 1, 1, 1})) < 0) {
          x[static_cast<std::size_t>(i - 1)] = Rational(1);
        } else if (analysis.negative_point) {
          x[static_cast<std::size_t>(i - 1)] = Rational(analysis.negative_point->get_num());
          x[static_cast<std::size_t>(j - 1)] = Rational(analysis.negative_point->get_den());
        } else {
          x[static_cast<std::size_t>(j - 1)] = Rational(1);
        }
        report.evidence = make_witness(T, std::move(x));
        return report;
      }
    }
  }

  const auto oracle = oracle_verdict(T, opts);
  ClassifierReport<Rational> report;
  report.applicable = true;
  report.rule = "oracle";
  report.decisive = oracle.decisive;
  report.verdict = oracle.verdict;
  report.evidence = oracle.witness;
  return report;
}

}  // namespace coposit
