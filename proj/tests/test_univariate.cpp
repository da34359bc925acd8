#include <gtest/gtest.h>

#include <random>

#include <coposit/univariate.hpp>

using namespace coposit;

namespace {

Poly make(std::initializer_list<long> ascending) {
  Poly p;
  for (long c : ascending) p.emplace_back(c);
  return p;
}

}  // namespace

TEST(PolyOps, EvalAndDerivative) {
  const Poly p = make({1, -4, 6, -4, 1});  // (s-1)^4
  EXPECT_EQ(polyops::eval(p, Rational(1)), Rational(0));
  EXPECT_EQ(polyops::eval(p, Rational(2)), Rational(1));
  EXPECT_EQ(polyops::eval(p, Rational(1, 2)), Rational(1, 16));
  const Poly d = polyops::derivative(p);
  EXPECT_EQ(polyops::eval(d, Rational(1)), Rational(0));
  EXPECT_EQ(polyops::degree(d), 3);
}

TEST(PolyOps, GcdAndSquareFree) {
  const Poly p = make({1, -4, 6, -4, 1});
  const Poly sf = polyops::square_free_part(p);
  EXPECT_EQ(polyops::degree(sf), 1);  // (s-1)
  EXPECT_EQ(polyops::eval(sf, Rational(1)), Rational(0));
}

TEST(Isolation, SeparatesCloseRoots) {
  // (s - 1)(s - 9/8)(s - 2)(s + 3): three positive roots, two close together.
  Poly p = make({1});
  const Rational roots[] = {Rational(1), Rational(9, 8), Rational(2), Rational(-3)};
  for (const Rational& r : roots) {
    Poly next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * r;
    }
    p = next;
  }
  const Poly g = polyops::square_free_part(p);
  const auto chain = polyops::sturm_chain(g);
  Rational hi = polyops::root_upper_bound(g);
  const auto intervals = isolate_roots(g, chain, Rational(0), hi);
  ASSERT_EQ(intervals.size(), 3u);
  // Each interval holds exactly one of the positive roots, in order.
  const Rational expected[] = {Rational(1), Rational(9, 8), Rational(2)};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_LT(intervals[i].first, expected[i]);
    EXPECT_LT(expected[i], intervals[i].second);
  }
}

TEST(Halfline, PositivePolynomial) {
  const auto a = analyze_halfline(make({1, 0, 6, 0, 1}));  // s^4 + 6 s^2 + 1
  EXPECT_TRUE(a.nonneg);
  EXPECT_TRUE(a.positive);
  EXPECT_FALSE(a.zero_point.has_value());
  EXPECT_FALSE(a.negative_point.has_value());
}

TEST(Halfline, TouchingZero) {
  const auto a = analyze_halfline(make({1, -4, 6, -4, 1}));  // (s-1)^4
  EXPECT_TRUE(a.nonneg);
  EXPECT_FALSE(a.positive);
  ASSERT_TRUE(a.zero_point.has_value());
  EXPECT_EQ(*a.zero_point, Rational(1));
}

TEST(Halfline, NegativeSomewhere) {
  const auto a = analyze_halfline(make({1, -4, 6, -4, 0, 1}));  // add s^5, dip near 1 stays
  const auto b = analyze_halfline(make({-1, 0, 0, 0, 1}));      // s^4 - 1
  EXPECT_FALSE(b.nonneg);
  ASSERT_TRUE(b.negative_point.has_value());
  EXPECT_LT(polyops::eval(make({-1, 0, 0, 0, 1}), *b.negative_point), Rational(0));
  (void)a;
}

TEST(Halfline, NegativeOnlyInsideNarrowDip) {
  // (s-1)^2 - 1/100 = s^2 - 2s + 99/100: negative exactly on (0.9, 1.1).
  Poly p;
  p.emplace_back(Rational(99, 100));
  p.emplace_back(-2);
  p.emplace_back(1);
  const auto a = analyze_halfline(p);
  EXPECT_FALSE(a.nonneg);
  ASSERT_TRUE(a.negative_point.has_value());
  EXPECT_LT(polyops::eval(p, *a.negative_point), Rational(0));
}

TEST(Halfline, RootAtZeroAndIrrationalZero) {
  // s^2 (s - 1)^2 has roots at 0 and 1.
  const auto a = analyze_halfline(make({0, 0, 1, -2, 1}));
  EXPECT_TRUE(a.nonneg);
  EXPECT_FALSE(a.positive);
  ASSERT_TRUE(a.zero_point.has_value());
  EXPECT_EQ(*a.zero_point, Rational(0));

  // (s^2 - 2)^2 is nonnegative with an irrational double root.
  const auto b = analyze_halfline(make({4, 0, -4, 0, 1}));
  EXPECT_TRUE(b.nonneg);
  EXPECT_FALSE(b.positive);
  EXPECT_FALSE(b.zero_point.has_value());
  EXPECT_EQ(b.distinct_positive_roots, 1);
}

TEST(Halfline, ZeroAndConstantPolynomials) {
  const auto zero = analyze_halfline({});
  EXPECT_TRUE(zero.nonneg);
  EXPECT_FALSE(zero.positive);
  const auto pos = analyze_halfline(make({3}));
  EXPECT_TRUE(pos.positive);
  const auto neg = analyze_halfline(make({-3}));
  EXPECT_FALSE(neg.nonneg);
  ASSERT_TRUE(neg.negative_point.has_value());
  const auto cubic_drop = analyze_halfline(make({1, 0, 0, -1}));  // 1 - s^3
  EXPECT_FALSE(cubic_drop.nonneg);
}

TEST(HalflineProperty, AgreesWithDenseSampling) {
  std::mt19937 rng(321);
  std::uniform_int_distribution<long> coeff(-6, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    Poly p;
    const int deg = 1 + trial % 4;
    for (int i = 0; i <= deg; ++i) p.emplace_back(coeff(rng));
    const auto a = analyze_halfline(p);
    // Dense rational sampling can only refute nonnegativity.
    bool sampled_negative = false;
    for (int num = 0; num <= 400 && !sampled_negative; ++num)
      if (sgn(polyops::eval(p, Rational(num, 40))) < 0) sampled_negative = true;
    if (sampled_negative) EXPECT_FALSE(a.nonneg);
    if (a.nonneg) EXPECT_FALSE(sampled_negative);
    if (a.negative_point) {
      EXPECT_GE(sgn(*a.negative_point), 0);
      EXPECT_LT(polyops::eval(p, *a.negative_point), Rational(0));
    }
    if (a.zero_point) {
      EXPECT_GE(sgn(*a.zero_point), 0);
      EXPECT_EQ(polyops::eval(p, *a.zero_point), Rational(0));
    }
  }
}
