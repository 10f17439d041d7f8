#include <gtest/gtest.h>

#include <algorithm>

#include "mdbv/batch_codec.hpp"
#include "mdbv/errors.hpp"
#include "mdbv/simulation.hpp"

using namespace mdbv;

TEST(Scenario, TextRoundTripAndValidation) {
  ScenarioConfig cfg;
  cfg.n_vehicles = 7;
  cfg.corruption_rate = 0.25;
  cfg.mode = VerificationMode::un_agg;
  cfg.seed = "abc";
  EXPECT_EQ(scenario_from_text(scenario_to_text(cfg)), cfg);
  EXPECT_EQ(scenario_from_text("# defaults\n"), ScenarioConfig{});
  EXPECT_THROW(scenario_from_text("vehicles=3\n"), ConfigError);
  EXPECT_THROW(scenario_from_text("corruption_rate=1.5\n"), ConfigError);
  EXPECT_THROW(scenario_from_text("corruption_rate=-0.1\n"), ConfigError);
  EXPECT_THROW(scenario_from_text("n_vehicles=0\n"), ConfigError);
  EXPECT_THROW(scenario_from_text("data_size=0\n"), ConfigError);
  EXPECT_THROW(scenario_from_text("n_rounds=-1\n"), ConfigError);
  EXPECT_THROW(scenario_from_text("mode=batch\n"), ConfigError);
}

TEST(Simulation, HonestRoundsAllVerify) {
  ScenarioConfig cfg;  // 20 vehicles, 5 rounds, 20-byte data
  const auto report = run_scenario(cfg);
  ASSERT_EQ(report.rounds.size(), 5u);
  for (const auto& r : report.rounds) {
    EXPECT_TRUE(r.verified) << r.round;
    EXPECT_EQ(r.signatures, 20u);
    EXPECT_EQ(r.sign_ops, (OpCounts{60, 20, 0}));
    EXPECT_EQ(r.verify_ops, (OpCounts{40, 21, 3}));
    ASSERT_EQ(r.groups.size(), 1u);
    const std::string delta = "area-0|epoch-" + std::to_string(r.round);
    EXPECT_EQ(r.groups[0].area, delta);
    EXPECT_EQ(r.message_bytes, batch_wire_size(65, delta.size(), 20, 4 * 20, 20 * 20));
  }
  EXPECT_EQ(report.rounds_verified(), 5u);
  EXPECT_EQ(report.signatures_per_vehicle.size(), 20u);
  EXPECT_EQ(report.signatures_per_vehicle.at("V001"), 5u);
}

TEST(Simulation, FullCorruptionFailsEveryRound) {
  ScenarioConfig cfg;
  cfg.n_rounds = 3;
  cfg.corruption_rate = 1.0;
  const auto report = run_scenario(cfg);
  for (const auto& r : report.rounds) {
    EXPECT_FALSE(r.verified) << r.round;
    EXPECT_EQ(r.corrupted, 20u);
  }
  EXPECT_EQ(report.rounds_verified(), 0u);
}

TEST(Simulation, SameSeedSameReport) {
  ScenarioConfig cfg;
  cfg.n_vehicles = 6;
  cfg.n_rounds = 3;
  cfg.corruption_rate = 0.3;
  const auto a = run_scenario(cfg);
  const auto b = run_scenario(cfg);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.summary(), b.summary());
  cfg.seed = "other";
  EXPECT_NE(a.to_csv(), run_scenario(cfg).to_csv());
}

TEST(Simulation, JoinAndLeave) {
  ScenarioConfig cfg;
  cfg.n_vehicles = 3;
  Simulation sim(cfg);
  EXPECT_THROW(sim.join_vehicle("V001"), StateError);
  EXPECT_THROW(sim.leave_vehicle("V999"), StateError);
  sim.leave_vehicle("V002");
  sim.join_vehicle("V010");
  EXPECT_FALSE(sim.is_active("V002"));
  const auto& r1 = sim.run_round();
  EXPECT_TRUE(r1.verified);
  EXPECT_EQ(r1.participants, (std::vector<std::string>{"V001", "V003", "V010"}));

  sim.join_vehicle("V002");  // re-registration with fresh key material
  const auto& r2 = sim.run_round();
  EXPECT_TRUE(r2.verified);
  EXPECT_EQ(r2.signatures, 4u);
}

TEST(Simulation, StateInfoGroupsAreIsolated) {
  ScenarioConfig cfg;
  cfg.n_vehicles = 9;
  cfg.n_rounds = 2;
  cfg.area_count = 3;
  const auto report = run_scenario(cfg);
  for (const auto& r : report.rounds) {
    EXPECT_TRUE(r.verified);
    ASSERT_EQ(r.groups.size(), 3u);
    for (std::size_t a = 0; a < 3; ++a) {
      EXPECT_EQ(r.groups[a].area, "area-" + std::to_string(a) + "|epoch-" + std::to_string(r.round));
      EXPECT_EQ(r.groups[a].entries, 3u);
    }
    EXPECT_EQ(r.verify_ops.pairing, 9u);
  }
}

TEST(Simulation, ModesAgreeAndUnAggregatedPinpointsCorruption) {
  ScenarioConfig cfg;
  cfg.n_rounds = 4;
  cfg.corruption_rate = 0.05;
  cfg.seed = "pinpoint";
  const auto cmp = compare_modes(cfg);
  EXPECT_TRUE(cmp.outcomes_agree());
  std::size_t corrupted_rounds = 0;
  for (std::size_t i = 0; i < cmp.un_agg.rounds.size(); ++i) {
    const auto& u = cmp.un_agg.rounds[i];
    const auto& a = cmp.aggregated.rounds[i];
    EXPECT_EQ(u.corrupted_ids, a.corrupted_ids);
    EXPECT_EQ(u.verify_ops.pairing, 3 * (u.signatures - u.rejected_at_rsu));
    EXPECT_EQ(a.verify_ops.pairing, 3u);
    std::vector<std::string> failed = u.groups.at(0).failed_ids;
    EXPECT_EQ(failed.size() + u.rejected_at_rsu, u.corrupted);
    for (const auto& id : failed) {
      EXPECT_NE(std::find(u.corrupted_ids.begin(), u.corrupted_ids.end(), id), u.corrupted_ids.end());
    }
    EXPECT_EQ(a.verified, u.corrupted == 0);
    corrupted_rounds += u.corrupted > 0;
  }
  EXPECT_GT(corrupted_rounds, 0u);
  EXPECT_LT(corrupted_rounds, 4u);
}

TEST(Simulation, HonestComparisonCostsSixtyVersusThreePairings) {
  ScenarioConfig cfg;
  cfg.n_rounds = 1;
  const auto cmp = compare_modes(cfg);
  EXPECT_TRUE(cmp.outcomes_agree());
  EXPECT_EQ(cmp.aggregated.total_verify_ops(), (OpCounts{40, 21, 3}));
  EXPECT_EQ(cmp.un_agg.total_verify_ops(), (OpCounts{40, 40, 60}));
  EXPECT_LT(cmp.aggregated.total_message_bytes(), cmp.un_agg.total_message_bytes());
}
