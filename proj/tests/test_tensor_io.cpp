#include <gtest/gtest.h>

#include <coposit/tensor_io.hpp>

using namespace coposit;

TEST(Parse, BasicExactDocument) {
  const auto parsed =
      parse_tensor(R"({"order":4,"dim":2,"entries":{"1111":1,"2222":1,"1122":1}})");
  ASSERT_TRUE(is_exact(parsed));
  const auto& T = std::get<RationalTensor>(parsed);
  EXPECT_EQ(T.order(), 4);
  EXPECT_EQ(T.dim(), 2);
  EXPECT_EQ(T.entries().size(), 3u);
  EXPECT_EQ(T.at({1, 1, 2, 2}), Rational(1));
  EXPECT_EQ(T.at({1, 1, 1, 2}), Rational(0));
}

TEST(Parse, FractionStringsStayExact) {
  const auto parsed = parse_tensor(R"({"order":4,"dim":2,"entries":{"1111":"-3/2"}})");
  ASSERT_TRUE(is_exact(parsed));
  EXPECT_EQ(std::get<RationalTensor>(parsed).at({1, 1, 1, 1}), Rational(-3, 2));
}

TEST(Parse, DecimalsSwitchToFloatMode) {
  const auto parsed =
      parse_tensor(R"({"order":4,"dim":2,"entries":{"1111":1,"1122":0.5}})");
  ASSERT_FALSE(is_exact(parsed));
  const auto& T = std::get<FloatTensor>(parsed);
  EXPECT_DOUBLE_EQ(T.at({1, 1, 2, 2}), 0.5);
  EXPECT_DOUBLE_EQ(T.at({1, 1, 1, 1}), 1.0);
}

TEST(Parse, RejectsNonCanonicalKey) {
  EXPECT_THROW(parse_tensor(R"({"order":4,"dim":2,"entries":{"2111":1}})"), ParseError);
}

TEST(Parse, RejectsDuplicateKey) {
  EXPECT_THROW(parse_tensor(R"({"order":4,"dim":2,"entries":{"1111":1,"1111":2}})"),
               ParseError);
}

TEST(Parse, RejectsOutOfRangeLabel) {
  EXPECT_THROW(parse_tensor(R"({"order":4,"dim":2,"entries":{"1113":1}})"), ParseError);
}

TEST(Parse, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_tensor("not json"), ParseError);
  EXPECT_THROW(parse_tensor(R"({"order":4,"entries":{}})"), ParseError);
  EXPECT_THROW(parse_tensor(R"({"order":4,"dim":2,"entries":{"111":1}})"), ParseError);
  EXPECT_THROW(parse_tensor(R"({"order":4,"dim":2,"entries":{"1111":"1/0"}})"), ParseError);
  EXPECT_THROW(parse_tensor(R"({"order":4,"dim":2,"entries":{},"extra":1})"), ParseError);
  EXPECT_THROW(parse_tensor(R"({"order":0,"dim":2,"entries":{}})"), ParseError);
}

TEST(Serialize, RoundTripIsIdentityOnCanonicalForm) {
  const char* documents[] = {
      R"({"order":4,"dim":2,"entries":{"1111":1,"1122":1,"2222":1}})",
      R"({"order":4,"dim":3,"entries":{"1111":"1/3","1123":-1,"3333":7}})",
      R"({"order":3,"dim":2,"entries":{"111":2,"122":-1}})",
  };
  for (const char* doc : documents) {
    const std::string once = serialize(parse_tensor(doc));
    const std::string twice = serialize(parse_tensor(once));
    EXPECT_EQ(once, twice);
  }
}

TEST(Serialize, EmitsFractionsAsStrings) {
  const auto parsed = parse_tensor(R"({"order":4,"dim":2,"entries":{"1111":"1/3"}})");
  EXPECT_NE(serialize(parsed).find("\"1/3\""), std::string::npos);
}

TEST(Serialize, FloatRoundTrip) {
  const auto parsed = parse_tensor(R"({"order":4,"dim":2,"entries":{"1111":0.25}})");
  const std::string once = serialize(parsed);
  const auto reparsed = parse_tensor(once);
  ASSERT_FALSE(is_exact(reparsed));
  EXPECT_DOUBLE_EQ(std::get<FloatTensor>(reparsed).at({1, 1, 1, 1}), 0.25);
}
