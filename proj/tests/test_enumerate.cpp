#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "opstat/enumerate.hpp"
#include "opstat/paths.hpp"
#include "oracle.hpp"

using namespace opstat;

namespace {

std::set<std::string> collect(const FamilySpec& spec) {
  std::set<std::string> out;
  std::size_t n = 0;
  generate(spec, [&](const OrderedSetPartition& p) {
    out.insert(p.to_string());
    ++n;
  });
  EXPECT_EQ(n, out.size()) << spec.to_string() << " has repeats";
  return out;
}

std::set<std::string> strings(const std::vector<oracle::Blocks>& v) {
  std::set<std::string> out;
  for (const auto& b : v) out.insert(OrderedSetPartition(b).to_string());
  return out;
}

class ScopedEnv {
public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

private:
  const char* name_;
};

}  // namespace

TEST(Generators, FamiliesMatchOracle) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      auto op = oracle::ordered_partitions(n, k);
      auto sp = oracle::set_partitions(n, k);
      ASSERT_EQ(collect(FamilySpec::ordered(n, k)), strings(op));
      ASSERT_EQ(collect(FamilySpec::set_partitions(n, k)), strings(sp));
      ASSERT_EQ(family_size(FamilySpec::ordered(n, k)), op.size());
      ASSERT_EQ(family_size(FamilySpec::set_partitions(n, k)), sp.size());

      std::set<std::string> by_type;
      for_each_path(n, k, [&](const LatticePath& w) {
        auto spec = FamilySpec::of_type(path_type(w));
        auto members = collect(spec);
        ASSERT_EQ(members.size(), family_size(spec));
        for (const auto& m : members) {
          ASSERT_EQ(type_of(parse_partition(m)), spec.type);
          by_type.insert(m);
        }
      });
      ASSERT_EQ(by_type, strings(op));
    }
}

TEST(Generators, SigmaFamilies) {
  auto sigma = parse_permutation("231");
  auto members = collect(FamilySpec::sigma_partitions(5, sigma));
  EXPECT_EQ(members.size(), oracle::set_partitions(5, 3).size());
  for (const auto& m : members) EXPECT_EQ(standard_form(parse_partition(m)).sigma, sigma);
  EXPECT_THROW(generate(FamilySpec::sigma_partitions(2, parse_permutation("123")), [](const auto&) {}),
               std::invalid_argument);
}

TEST(Generators, Rearrangements) {
  auto r = collect(FamilySpec::rearrangements(parse_partition("1 4/2 3/5")));
  EXPECT_EQ(r, (std::set<std::string>{"1 4/2 3/5", "1 4/5/2 3", "2 3/1 4/5", "2 3/5/1 4", "5/1 4/2 3",
                                      "5/2 3/1 4"}));
  EXPECT_EQ(collect(FamilySpec::set_partitions(1, 1)), std::set<std::string>{"1"});
  EXPECT_EQ(FamilySpec::ordered(3, 2).to_string(), "OP(3,2)");
}

TEST(Generators, OrderAndShards) {
  // Ordinals follow generate's order and the shards cover it exactly once.
  std::vector<std::string> order;
  generate(FamilySpec::ordered(5, 3), [&](const OrderedSetPartition& p) { order.push_back(p.to_string()); });
  std::vector<std::string> seen(order.size());
  for (int s = 0; s < 3; ++s)
    generate_shard(FamilySpec::ordered(5, 3), s, 3, [&](std::uint64_t ord, const OrderedSetPartition& p) {
      ASSERT_LT(ord, seen.size());
      ASSERT_TRUE(seen[ord].empty());
      seen[ord] = p.to_string();
    });
  EXPECT_EQ(seen, order);
  EXPECT_THROW(generate_shard(FamilySpec::ordered(3, 2), 3, 3, [](auto, const auto&) {}), std::invalid_argument);
}

TEST(Generators, WordsAndCompositions) {
  std::vector<Word> words;
  for_each_word({2, 1}, [&](const Word& w) { words.push_back(w); });
  EXPECT_EQ(words, (std::vector<Word>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
  std::vector<Composition> comps;
  for_each_composition(3, [&](const Composition& c) { comps.push_back(c); });
  EXPECT_EQ(comps, (std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
  int perms = 0;
  for_each_permutation(4, [&](const Permutation&) { ++perms; });
  EXPECT_EQ(perms, 24);
}

TEST(Distribution, Examples) {
  auto rcb = Weight{StatExpr::parse("rcb"), Var::P};
  auto lsb = Weight{StatExpr::parse("lsb"), Var::Q};
  EXPECT_EQ(distribution(FamilySpec::set_partitions(3, 2), {rcb, lsb}), stirling_pq(3, 2));
  EXPECT_TRUE(distribution(FamilySpec::set_partitions(3, 4), {rcb}).is_zero());
  auto mak = Weight{StatExpr::parse("MAK"), Var::Q};
  auto single = distribution(FamilySpec::rearrangements(parse_partition("6 8/5/1 4 7/3 9/2")), {mak});
  EXPECT_EQ(single.at_one(), 120);
  EXPECT_EQ(distribution(FamilySpec::ordered(4, 2), {mak}).at_one(), 14);
}

TEST(Distribution, ThreadsAgree) {
  auto w = std::vector<Weight>{{StatExpr::parse("MAK+bInv"), Var::P}, {StatExpr::parse("cinvLSB"), Var::Q}};
  for (int k = 1; k <= 6; ++k)
    EXPECT_EQ(distribution(FamilySpec::ordered(6, k), w, 3), distribution(FamilySpec::ordered(6, k), w, 1));
}

TEST(Beta, Examples) {
  auto pi0 = parse_partition("1 4 7/2/3 9/5/6 8");
  EXPECT_EQ(beta(pi0, {0, 0, 0, 0, 0}), pi0);
  EXPECT_THROW(beta(pi0, {0, 2, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(beta(pi0, {0, 0}), std::invalid_argument);
  auto pi = parse_partition("6 8/5/1 4 7/3 9/2");
  auto c = beta_inv(pi);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(beta(pi0, c), pi);
  int sum = 0;
  for (int v : c) sum += v;
  EXPECT_EQ(sum, composite(pi, StatName::MAJ));
}

TEST(Beta, BijectionOnRearrangements) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& b : oracle::set_partitions(5, k)) {
      OrderedSetPartition pi0(b);
      std::set<std::string> image;
      std::vector<int> c(k, 0);
      while (true) {
        auto pi = beta(pi0, c);
        ASSERT_EQ(standard_form(pi).partition, pi0);
        ASSERT_EQ(beta_inv(pi), c);
        int sum = 0;
        for (int v : c) sum += v;
        ASSERT_EQ(composite(pi, StatName::MAJ), sum);
        image.insert(pi.to_string());
        int j = 0;
        while (j < k && ++c[j] > j) c[j++] = 0;
        if (j == k) break;
      }
      ASSERT_EQ(image, collect(FamilySpec::rearrangements(pi0)));
    }
}

TEST(Verify, AllIdsPassSmall) {
  EXPECT_EQ(verify_ids().size(), 12u);
  for (const auto& id : verify_ids()) {
    VerifyParams params;
    params.n = 4;
    params.k = 2;
    if (id == "eq1.1") params.n = 3;
    if (id == "qfrob") params.order = 4;
    for (const auto& r : verify(id, params)) {
      EXPECT_TRUE(r.pass) << id << " " << r.params.dump();
      EXPECT_EQ(r.pass, !r.counterexample.has_value()) << id;
      EXPECT_EQ(r.theorem, id);
    }
  }
}

TEST(Verify, Examples) {
  VerifyParams params;
  params.n = 4;
  params.composition = Composition{1, 1};
  auto reports = verify("eq1.1", params);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, r.rhs);
  }

  params = {};
  params.n = 5;
  params.k = 3;
  params.partition = parse_partition("1 4/2 3/5");
  for (const auto& r : verify("thm3.5", params)) EXPECT_TRUE(r.pass) << r.params.dump();

  params = {};
  params.n = 5;
  params.k = 3;
  for (const auto& r : verify("thm3.2", params)) {
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs.at_one(), 150);
  }
}

TEST(Verify, Errors) {
  VerifyParams params;
  params.n = 4;
  params.k = 2;
  EXPECT_THROW(verify("thm9.9", params), std::invalid_argument);
  params.k = 5;
  EXPECT_THROW(verify("thm3.2", params), std::invalid_argument);
  {
    ScopedEnv env("OPSTAT_MAX_N", "3");
    EXPECT_EQ(max_ordered_n(), 3);
    params.k = 2;
    EXPECT_THROW(verify("thm3.2", params), ScaleError);
  }
  EXPECT_EQ(max_ordered_n(), 12);
  params.n = 13;
  params.k = 2;
  EXPECT_THROW(verify("thm3.1", params), ScaleError);
}

TEST(Verify, JobsAgree) {
  for (const char* id : {"thm3.1", "thm3.3", "eq5.8"}) {
    VerifyParams one, three;
    one.n = three.n = 5;
    one.k = three.k = 3;
    three.jobs = 3;
    auto a = verify(id, one), b = verify(id, three);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].lhs, b[i].lhs) << id;
      EXPECT_EQ(a[i].rhs, b[i].rhs) << id;
      EXPECT_EQ(a[i].pass, b[i].pass) << id;
    }
  }
}
