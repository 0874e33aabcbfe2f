#include <gtest/gtest.h>

#include "printers.hpp"
#include "wwlab/verify.hpp"

using namespace wwlab;

TEST(Verify, EveryTheoremPassesAtSmallSize) {
  VerifyOptions o;
  o.trunc = 10;
  o.k_range = std::pair{1, 3};
  o.max_weight = 8;
  for (const auto& id : theorem_ids()) {
    VerifyOptions oi = o;
    if (id == "stabilization") oi.k_range = std::pair{10, 11};
    for (const auto& r : verify(id, oi)) {
      EXPECT_TRUE(r.pass) << to_text(r, false);
      EXPECT_EQ(r.theorem, id);
    }
  }
}

TEST(Verify, BadArguments) {
  EXPECT_THROW(verify("nope", {}), std::invalid_argument);
  VerifyOptions o;
  o.trunc = 10;
  o.k_range = std::pair{3, 3};
  EXPECT_THROW(verify("stabilization", o), std::invalid_argument);
  o.k_range = std::pair{4, 2};
  EXPECT_THROW(verify("main", o), std::invalid_argument);
}

TEST(Verify, OneReportPerK) {
  VerifyOptions o;
  o.k_range = std::pair{2, 5};
  o.trunc = 8;
  const auto reports = verify("main", o);
  ASSERT_EQ(reports.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(to_text(reports[static_cast<std::size_t>(i)], false),
                                        "PASS main k=" + std::to_string(i + 2) + " trunc=8");
}

TEST(Verify, OutputIndependentOfThreads) {
  VerifyOptions o;
  o.trunc = 12;
  std::string serial, parallel;
  o.threads = 1;
  for (const auto& r : verify("primc-fini-b1", o)) serial += to_text(r, false) + "\n";
  o.threads = 4;
  for (const auto& r : verify("primc-fini-b1", o)) parallel += to_text(r, false) + "\n";
  EXPECT_EQ(serial, parallel);
}

TEST(Verify, MismatchIsReported) {
  VerificationReport r;
  r.theorem = "demo";
  const QSeries x = QSeries::polynomial(4, {{0, 1}, {2, CoeffPoly::var(Var::a)}});
  EXPECT_TRUE(compare_into(r, "same", x, x));
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(compare_into(r, "differs", x, QSeries::one(4)));
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.mismatch);
  EXPECT_EQ(r.mismatch->q_exponent, 2u);
  EXPECT_EQ(r.mismatch->lhs, "a");
  EXPECT_EQ(r.mismatch->rhs, "0");
  const auto j = to_json(r, false);
  EXPECT_EQ(j.at("verdict"), "fail");
  EXPECT_EQ(j.at("mismatch").at("q_exponent"), 2);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_TRUE(to_json(r, true).contains("elapsed_ms"));
}

TEST(OrdinaryPartitions, KnownCounts) {
  EXPECT_EQ(count_ordinary_partitions(11, [](int) { return true; }, false),
            (std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
  EXPECT_EQ(count_ordinary_partitions(10, [](int) { return true; }, true),
            (std::vector<long>{1, 1, 1, 2, 2, 3, 4, 5, 6, 8}));
}
