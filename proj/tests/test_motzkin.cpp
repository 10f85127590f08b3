#include <gtest/gtest.h>

#include "opstat/motzkin.hpp"
#include "opstat/statistics.hpp"
#include "oracle.hpp"

using namespace opstat;

namespace {

const char* kPi = "1 4 15/2 3/5 6/7 10 13/8/9 11/12 14";
const char* kCode = "UUDFUDUFUFDUDDD 1,1,2,1,1,2,1,3,1,2,3,1,2,2,1";

}  // namespace

TEST(Motzkin, ParseAndValidate) {
  auto d = parse_motzkin(kCode);
  EXPECT_EQ(d.length(), 15);
  EXPECT_EQ(d.to_string(), kCode);
  EXPECT_EQ(d.heights()[0], 0);
  EXPECT_EQ(d.heights()[2], 2);
  EXPECT_THROW(parse_motzkin("D 1"), std::invalid_argument);
  EXPECT_THROW(parse_motzkin("UD 1,2"), std::invalid_argument);
  EXPECT_THROW(parse_motzkin("UD 2,1"), std::invalid_argument);
  EXPECT_THROW(parse_motzkin("F 2"), std::invalid_argument);
  EXPECT_THROW(parse_motzkin("UD 1"), std::invalid_argument);
}

TEST(Motzkin, GoldenEncoding) {
  auto pi = parse_partition(kPi);
  EXPECT_EQ(motzkin_encode(pi).to_string(), kCode);
  EXPECT_EQ(motzkin_decode(parse_motzkin(kCode)), pi);
  EXPECT_EQ(motzkin_encode(parse_partition("1 2 3")).to_string(), "UFD 1,1,1");
  EXPECT_EQ(motzkin_encode(parse_partition("1/2/3")).to_string(), "FFF 1,1,1");
}

TEST(Motzkin, GoldenInvolution) {
  auto pi = parse_partition(kPi);
  auto g = motzkin_g(parse_motzkin(kCode));
  EXPECT_EQ(g.to_string(), "UUUDUFDFDUDFUDD 1,1,1,2,1,2,3,3,2,1,2,1,1,2,1");
  auto l = lambda_map(pi);
  EXPECT_EQ(l.to_string(), "1 12 15/2 4/3 6 9/5 7/8/10 11/13 14");
  EXPECT_EQ(composite(pi, StatName::MAK), 37);
  EXPECT_EQ(stat(l, StatName::rcb), 37);
  EXPECT_EQ(stat(pi, StatName::lcb), 16);
  EXPECT_EQ(stat(l, StatName::lcb), 16);
}

TEST(Motzkin, RejectsOrderedInput) {
  EXPECT_THROW(motzkin_encode(parse_partition("2/1")), std::invalid_argument);
}

TEST(Motzkin, Exhaustive) {
  for (int n = 1; n <= 7; ++n) {
    long long count = 0;
    for (int k = 1; k <= n; ++k)
      for (const auto& b : oracle::set_partitions(n, k)) {
        ++count;
        OrderedSetPartition pi(b);
        auto d = motzkin_encode(pi);
        ASSERT_NO_THROW(d.validate());
        ASSERT_EQ(motzkin_decode(d), pi);
        auto g = motzkin_g(d);
        ASSERT_NO_THROW(g.validate());
        ASSERT_EQ(motzkin_g(g), d);
        auto l = lambda_map(pi);
        ASSERT_TRUE(l.is_standard_form());
        ASSERT_EQ(l.num_blocks(), k);
        ASSERT_EQ(lambda_map(l), pi);
        ASSERT_EQ(stat(l, StatName::rcb), composite(pi, StatName::MAK)) << pi.to_string();
        ASSERT_EQ(stat(l, StatName::lcb), stat(pi, StatName::lcb)) << pi.to_string();
      }
    ASSERT_GT(count, 0);
  }
}
