#include <gtest/gtest.h>

#include <coposit/multi_index.hpp>

using namespace coposit;

TEST(Canonicalize, SortsLabels) {
  EXPECT_EQ(canonicalized({2, 1, 1, 1}, 2), (MultiIndex{1, 1, 1, 2}));
  EXPECT_EQ(canonicalized({1, 1, 1, 1}, 2), (MultiIndex{1, 1, 1, 1}));
  EXPECT_EQ(canonicalized({3, 1, 2, 1}, 3), (MultiIndex{1, 1, 2, 3}));
}

TEST(Canonicalize, RejectsOutOfRangeLabels) {
  EXPECT_THROW(canonicalized({0, 1, 1, 1}, 3), std::out_of_range);
  EXPECT_THROW(canonicalized({1, 4, 1, 1}, 3), std::out_of_range);
}

TEST(Multiplicity, QuarticValues) {
  EXPECT_EQ(multiplicity({1, 1, 1, 2}), 4u);
  EXPECT_EQ(multiplicity({1, 1, 2, 2}), 6u);
  EXPECT_EQ(multiplicity({1, 1, 2, 3}), 12u);
  EXPECT_EQ(multiplicity({1, 1, 1, 1}), 1u);
  EXPECT_EQ(multiplicity({1, 2, 3, 4}), 24u);
}

TEST(Multiplicity, RejectsNonCanonical) {
  EXPECT_THROW(multiplicity({2, 1, 1, 1}), std::invalid_argument);
}

TEST(Multiplicity, SumsToFullBox) {
  for (int n : {2, 3}) {
    for (int m : {3, 4}) {
      std::uint64_t total = 0;
      for (const MultiIndex& idx : canonical_indices(m, n)) total += multiplicity(idx);
      std::uint64_t expected = 1;
      for (int i = 0; i < m; ++i) expected *= static_cast<std::uint64_t>(n);
      EXPECT_EQ(total, expected) << "order " << m << " dim " << n;
    }
  }
}

TEST(CanonicalIndices, CountsAndOrder) {
  const auto idx42 = canonical_indices(4, 2);
  EXPECT_EQ(idx42.size(), 5u);  // C(5,4)
  const auto idx43 = canonical_indices(4, 3);
  EXPECT_EQ(idx43.size(), 15u);  // C(6,4)
  EXPECT_EQ(idx43.front(), (MultiIndex{1, 1, 1, 1}));
  EXPECT_EQ(idx43.back(), (MultiIndex{3, 3, 3, 3}));
  for (std::size_t i = 1; i < idx43.size(); ++i) EXPECT_LT(idx43[i - 1], idx43[i]);
}

TEST(IndexKey, DigitsOnly) {
  EXPECT_EQ(index_key({1, 1, 2, 3}), "1123");
  EXPECT_THROW(index_key({1, 10}), std::out_of_range);
}
