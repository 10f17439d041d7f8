#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mdbv/op_counter.hpp"
#include "mdbv/rng.hpp"
#include "mdbv/scheme.hpp"

namespace mdbv {

enum class VerificationMode { aggregated, un_agg };

std::string_view to_string(VerificationMode mode);
// Throws ConfigError on anything but "aggregated" / "un_agg".
VerificationMode parse_verification_mode(std::string_view text);

struct ScenarioConfig {
  std::size_t n_vehicles = 20;
  std::size_t n_rounds = 5;
  std::size_t data_size = 20;  // bytes per monitoring datum (160 bits)
  double corruption_rate = 0.0;
  VerificationMode mode = VerificationMode::aggregated;
  std::string seed = "mdbv";
  std::size_t area_count = 1;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Throws ConfigError naming the first invalid field.
void validate(const ScenarioConfig& cfg);
// Flat key-value text with the field names above; absent keys keep their
// defaults, unknown keys are errors.
ScenarioConfig scenario_from_text(std::string_view text);
std::string scenario_to_text(const ScenarioConfig& cfg);

// One Δ group as seen by the data center.
struct GroupRecord {
  std::string area;
  std::size_t entries = 0;
  bool valid = false;
  // Identities whose individual check failed (un_agg mode only).
  std::vector<std::string> failed_ids;
};

struct RoundRecord {
  std::size_t round = 0;  // 1-based
  std::vector<std::string> participants;
  std::size_t signatures = 0;
  std::size_t corrupted = 0;
  std::vector<std::string> corrupted_ids;
  // Messages whose corrupted signature no longer decodes; the RSU drops
  // them and the round cannot verify.
  std::size_t rejected_at_rsu = 0;
  std::vector<GroupRecord> groups;
  bool verified = false;
  OpCounts sign_ops;
  OpCounts verify_ops;
  std::size_t message_bytes = 0;  // RSU → data center, codec output lengths
};

struct SimulationReport {
  ScenarioConfig config;
  std::vector<RoundRecord> rounds;
  std::map<std::string, std::size_t> signatures_per_vehicle;

  OpCounts total_sign_ops() const;
  OpCounts total_verify_ops() const;
  std::size_t total_message_bytes() const;
  std::size_t rounds_verified() const;

  // One row per round.
  std::string to_csv() const;
  std::string summary() const;
};

// KGC, vehicles, one RSU and the data center, advanced in logical rounds.
//
// Δ for area a in round r is "area-<a>|epoch-<r>". Vehicles are assigned to
// areas round-robin in join order. The RSU groups messages by exact Δ, and
// the data center batch-verifies each group (or checks every signature in
// un_agg mode). All randomness comes from child streams of the config seed.
class Simulation {
 public:
  // Runs setup on the library's default parameters and registers vehicles
  // V001 … Vn. Throws ConfigError.
  explicit Simulation(ScenarioConfig cfg);

  // Registers a new vehicle; it signs from the next round on. Throws
  // StateError if the id is already active.
  void join_vehicle(const std::string& id);
  // Throws StateError if the id is not active.
  void leave_vehicle(const std::string& id);

  const RoundRecord& run_round();
  void run_rounds(std::size_t count);

  const SimulationReport& report() const noexcept { return report_; }
  const Mdbv& scheme() const noexcept { return *scheme_; }
  bool is_active(const std::string& id) const;

 private:
  struct Vehicle {
    VehicleCredentials creds;
    std::size_t area;
  };

  StateInfo area_delta(std::size_t area, std::size_t round) const;

  ScenarioConfig cfg_;
  SeededRng master_;
  std::unique_ptr<Mdbv> scheme_;
  MasterSecretKey msk_;
  std::vector<std::pair<std::string, Vehicle>> active_;  // join order
  std::map<std::string, std::size_t> registrations_;
  std::size_t joins_ = 0;
  std::size_t round_ = 0;
  SimulationReport report_;
};

SimulationReport run_scenario(const ScenarioConfig& cfg);

struct ModeComparison {
  SimulationReport aggregated;
  SimulationReport un_agg;

  // Every round and every Δ group has the same outcome in both modes.
  bool outcomes_agree() const;
};

// Same seeded scenario in both modes (cfg.mode is ignored).
ModeComparison compare_modes(ScenarioConfig cfg);

}  // namespace mdbv
