#include <gtest/gtest.h>

#include <algorithm>

#include "mdbv/cost_model.hpp"
#include "mdbv/errors.hpp"
#include "mdbv/fixtures.hpp"

using namespace mdbv;

namespace {

const CostModel& table() {
  static const CostModel model = CostModel::comparison_table();
  return model;
}

}  // namespace

TEST(CostModel, SchemeRowsMatchTheComparisonTable) {
  struct Row {
    const char* name;
    OpCounts sign;
    OpCounts verify_n1;
    OpCounts verify_n10;
    std::size_t points_n10;
  };
  // verify_ops are {M, H, P}.
  const Row rows[] = {
      {"ZQWZ", {5, 3, 0}, {2, 5, 5}, {20, 23, 5}, 2},
      {"CWZY", {4, 2, 0}, {2, 3, 4}, {20, 12, 4}, 11},
      {"DHW", {4, 2, 0}, {2, 3, 4}, {20, 12, 4}, 2},
      {"CTMHH", {4, 2, 0}, {2, 2, 4}, {20, 20, 4}, 2},
      {"un-Agg", {3, 1, 0}, {2, 2, 3}, {20, 20, 30}, 20},
      {"MDBV", {3, 1, 0}, {2, 2, 3}, {20, 11, 3}, 2},
  };
  ASSERT_EQ(table().schemes().size(), 6u);
  for (const auto& r : rows) {
    const SchemeCost& s = table().scheme(r.name);
    EXPECT_EQ(s.sign_ops(), r.sign) << r.name;
    EXPECT_EQ(s.verify_ops(1), r.verify_n1) << r.name;
    EXPECT_EQ(s.verify_ops(10), r.verify_n10) << r.name;
    EXPECT_EQ(s.length_in_points.at(10), r.points_n10) << r.name;
  }
  EXPECT_THROW(table().scheme("BLS"), DomainError);
}

TEST(CostModel, FixtureReplayOfSigningAndVerification) {
  const auto& f = paper_fixtures();
  const SchemeCost& mdbv = table().scheme("MDBV");
  // 3 × 10.087 + 23.417 and 3 × 15.063 + 2 × 10.087 + 2 × 23.417.
  EXPECT_NEAR(signing_ms(mdbv, f.timings), 53.678, 1e-9);
  EXPECT_NEAR(verification_ms(mdbv, f.timings, 1), 112.197, 1e-9);
  const auto p = predict_cost(mdbv, f.timings, 1);
  EXPECT_NEAR(p.sign_ms, 53.678, 1e-9);
  EXPECT_NEAR(p.verify_ms, 112.197, 1e-9);
  EXPECT_NEAR(predict_cost(mdbv, f.timings, 20).sign_ms, 20 * 53.678, 1e-9);
  EXPECT_THROW(predict_cost(mdbv, f.timings, 0), DomainError);
  EXPECT_THROW(verification_ms(mdbv, f.timings, 0), DomainError);
}

TEST(CostModel, VerificationIsAffineInN) {
  const auto& t = paper_fixtures().timings;
  for (const auto& s : table().schemes()) {
    const double v1 = verification_ms(s, t, 1), v2 = verification_ms(s, t, 2);
    const double slope = v2 - v1, intercept = v1 - slope;
    const double expected_slope = s.verify_pairing.per_n * t.pairing.median_ms +
                                  s.verify_mult.per_n * t.mult.median_ms +
                                  s.verify_hash.per_n * t.hash.median_ms;
    EXPECT_NEAR(slope, expected_slope, 1e-9) << s.name;
    for (std::size_t n : {5u, 17u, 50u}) {
      EXPECT_NEAR(verification_ms(s, t, n), intercept + slope * n, 1e-9) << s.name;
    }
  }
  // MDBV: 3P + H fixed, 2M + H per signer.
  const SchemeCost& mdbv = table().scheme("MDBV");
  EXPECT_NEAR(verification_ms(mdbv, t, 2) - verification_ms(mdbv, t, 1), 2 * 10.087 + 23.417, 1e-9);
  EXPECT_NEAR(2 * verification_ms(mdbv, t, 1) - verification_ms(mdbv, t, 2), 3 * 15.063 + 23.417, 1e-9);
}

TEST(CostModel, MdbvVerifiesFastestForEveryN) {
  const auto& t = paper_fixtures().timings;
  for (std::size_t n = 1; n <= 50; ++n) {
    const double mdbv = verification_ms(table().scheme("MDBV"), t, n);
    for (const auto& s : table().schemes()) {
      if (s.name == "MDBV") continue;
      if (s.name == "un-Agg" && n == 1) {
        EXPECT_EQ(mdbv, verification_ms(s, t, n));  // 3P + 2M + 2H either way
      } else {
        EXPECT_LT(mdbv, verification_ms(s, t, n)) << s.name << " n=" << n;
      }
    }
  }
}

TEST(CostModel, MessageSizes) {
  const SchemeCost& mdbv = table().scheme("MDBV");
  EXPECT_EQ(message_size(mdbv, 1, 64, 20), 148u);
  EXPECT_EQ(message_size(mdbv, 1, 20, 20), 60u);
  EXPECT_EQ(signed_datum_size(64, 20), 148u);
  EXPECT_EQ(signed_datum_size(20, 20), 60u);
  EXPECT_EQ(message_size(mdbv, 20, 64, 20), 528u);
  EXPECT_EQ(message_size(table().scheme("un-Agg"), 20, 64, 20), 20u * 128 + 400);
  EXPECT_EQ(message_size(table().scheme("CWZY"), 20, 64, 20), 21u * 64 + 400);
  EXPECT_EQ(message_size(table().scheme("un-Agg"), 1, 64, 20), message_size(mdbv, 1, 64, 20));
  EXPECT_THROW(message_size(mdbv, 0, 64, 20), DomainError);
}

TEST(CostModel, CsvShapes) {
  const std::string costs = costs_csv(table(), paper_fixtures().timings, {1, 20});
  EXPECT_EQ(costs.rfind("scheme,n,sign_ms,verify_ms\n", 0), 0u);
  EXPECT_NE(costs.find("MDBV,1,53.678,112.197\n"), std::string::npos);
  EXPECT_EQ(std::count(costs.begin(), costs.end(), '\n'), 13);
  const std::string sizes = sizes_csv(table(), {1}, 64, 20);
  EXPECT_NE(sizes.find("MDBV,1,64,20,148\n"), std::string::npos);
}

TEST(FormatDecimal, TrimsTrailingZeros) {
  EXPECT_EQ(format_decimal(566.875), "566.875");
  EXPECT_EQ(format_decimal(0.38920320000001), "0.3892032");
  EXPECT_EQ(format_decimal(148.0), "148");
  EXPECT_EQ(format_decimal(-0.0), "0");
  EXPECT_EQ(format_decimal(1.23456789, 3), "1.235");
}
