#include <gtest/gtest.h>

#include <set>

#include "printers.hpp"
#include "wwlab/bijection.hpp"
#include "wwlab/verify.hpp"

using namespace wwlab;

namespace {

ColouredPartition P(const char* text) { return parse_partition(text); }

const char* kLambda = "8d+8a+6c+5c+3d+1a";
const char* kMu = "8c+8c+7c+5c+3c+2c+2c+1c+1c";
const char* kNu1 = "8d+8b+8b+8a+7b+6c+5c+5b+3d+3b+2b+2b+1b+1b+1a";
const char* kNu2 = "8d+8c+8c+8a+7b+6c+5c+5b+3d+3c+2b+2b+1c+1c+1a";
const char* kNu3 = "8d+8c+8c+8a+7b+6c+5c+5c+3d+3c+2b+2b+1c+1c+1a";

std::vector<ColouredPartition> ordinary_c_partitions(int max_weight) {
  std::vector<ColouredPartition> out;
  for_each_ordinary_partition(max_weight, [](int) { return true; }, false, [&](const std::vector<int>& parts) {
    std::vector<ColouredPart> cp;
    for (int v : parts) cp.push_back({v, Colour::c});
    out.emplace_back(std::move(cp));
  });
  return out;
}

}  // namespace

TEST(Steps, WorkedExample) {
  EXPECT_EQ(to_string(step0_recolour(P("8c+8c+7c"))), "8b+8b+7b");
  const auto mu_prime = step0_recolour(P(kMu));
  EXPECT_EQ(to_string(step1_insert(P(kLambda), mu_prime)), kNu1);
  EXPECT_EQ(to_string(step2_recolour_after_ad(P(kNu1))), kNu2);
  EXPECT_EQ(to_string(step3_absorb_after_c(P(kNu2))), kNu3);
}

TEST(Steps, SmallCases) {
  EXPECT_EQ(to_string(step0_recolour(P(""))), "");
  EXPECT_EQ(to_string(step0_recolour(P("1c"))), "1b");
  EXPECT_EQ(to_string(step1_insert(P("1a"), P("1b"))), "1b+1a");
  EXPECT_EQ(to_string(step1_insert(P(""), P(""))), "");
  EXPECT_EQ(to_string(step2_recolour_after_ad(P("1b+1a"))), "1c+1a");
  EXPECT_EQ(to_string(step2_recolour_after_ad(P("2b+2b"))), "2b+2b");
  EXPECT_EQ(to_string(step3_absorb_after_c(P("5c+5b"))), "5c+5c");
  EXPECT_EQ(to_string(step3_absorb_after_c(P("2b+2b"))), "2b+2b");
}

TEST(Steps, Step0RejectsBadInput) {
  EXPECT_THROW(step0_recolour(P("2c+3c")), BijectionError);
  EXPECT_THROW(step0_recolour(P("2a")), BijectionError);
}

TEST(Forward, WorkedExampleAndInverse) {
  const BijectionTrace t = forward({P(kLambda), P(kMu)});
  EXPECT_EQ(to_string(t.nu3), kNu3);
  const BijectionTrace back = inverse(P(kNu3));
  EXPECT_EQ(to_string(back.pair.lambda), kLambda);
  EXPECT_EQ(to_string(back.pair.mu), kMu);
  EXPECT_EQ(to_string(back.nu2), kNu2);
  EXPECT_EQ(to_string(back.nu1), kNu1);
}

TEST(Forward, SmallPairs) {
  EXPECT_EQ(to_string(forward({P(""), P("")}).nu3), "");
  EXPECT_EQ(to_string(forward({P("1a"), P("1c")}).nu3), "1c+1a");
  EXPECT_EQ(to_string(forward({P(""), P("2c+2c")}).nu3), "2b+2b");
}

TEST(Forward, RejectsNonMembers) {
  EXPECT_THROW(forward({P("1c+1a"), P("")}), BijectionError);
  EXPECT_THROW(inverse(P("5d+5b")), BijectionError);
  try {
    inverse(P("5d+5b"));
  } catch (const BijectionError& e) {
    EXPECT_FALSE(e.violations().empty());
  }
}

TEST(Validate, SpecExamples) {
  const Validation c1 = validate(P("5a+4a"), Stage::insertion);
  EXPECT_FALSE(c1.ok);
  ASSERT_FALSE(c1.violations.empty());
  bool saw_c1 = false;
  for (const auto& v : c1.violations) saw_c1 = saw_c1 || v.condition == "C1";
  EXPECT_TRUE(saw_c1);

  const Validation c1p = validate(P("5d+5b"), Stage::recolour);
  EXPECT_FALSE(c1p.ok);
  bool saw_c1p = false;
  for (const auto& v : c1p.violations) saw_c1p = saw_c1p || v.condition == "C'1";
  EXPECT_TRUE(saw_c1p);

  EXPECT_TRUE(validate(P(kNu3), Stage::primc).ok);
  EXPECT_TRUE(validate(P(kNu1), Stage::insertion).ok);
  EXPECT_TRUE(validate(P(kNu2), Stage::recolour).ok);
  EXPECT_FALSE(validate(P("3at"), Stage::primc).ok);
}

TEST(Json, TraceSchema) {
  const auto j = to_json(forward({P(kLambda), P(kMu)}));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("direction"), "forward");
  EXPECT_EQ(j.at("nu3"), kNu3);
  EXPECT_EQ(j.at("mu_prime"), "8b+8b+7b+5b+3b+2b+2b+1b+1b");
}

// Exhaustive sweep: stage soundness, statistics and round trips.
TEST(Property, ExhaustiveRoundTrip) {
  const int W = 12;
  const auto lambdas = enumerate(capparelli_spec(), W);
  const auto mus = ordinary_c_partitions(W);
  std::set<ColouredPartition> images;
  std::size_t pairs = 0;
  for (const auto& lambda : lambdas) {
    for (const auto& mu : mus) {
      if (lambda.weight() + mu.weight() > W) continue;
      ++pairs;
      const PartitionPair pair{lambda, mu};
      const BijectionTrace t = forward(pair);
      ASSERT_TRUE(validate(t.nu1, Stage::insertion).ok) << to_string(t.nu1);
      ASSERT_TRUE(validate(t.nu2, Stage::recolour).ok) << to_string(t.nu2);
      ASSERT_TRUE(validate(t.nu3, Stage::primc).ok) << to_string(t.nu3);
      EXPECT_EQ(profile(t.nu3), profile(pair));
      EXPECT_EQ(inverse(t.nu3).pair, pair);
      images.insert(t.nu3);
    }
  }
  const auto primc = enumerate(primc_spec(), W);
  EXPECT_EQ(images.size(), pairs);
  EXPECT_EQ(primc.size(), pairs);
  for (const auto& nu : primc) EXPECT_EQ(forward(inverse(nu).pair).nu3, nu) << to_string(nu);
}
