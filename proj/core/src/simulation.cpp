#include "mdbv/simulation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mdbv/batch_codec.hpp"
#include "mdbv/errors.hpp"
#include "mdbv/kv_text.hpp"

namespace mdbv {
namespace {

std::size_t parse_count(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size() || value.front() == '-') throw std::invalid_argument(value);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a non-negative integer, got '" + value + "'");
  }
}

double parse_rate(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
}

std::string id_text(const Bytes& id) { return std::string(id.begin(), id.end()); }

void flip_bit(Bytes& bytes, std::size_t bit) {
  bytes[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
}

struct InFlight {
  StateInfo delta;
  BatchEntry entry;
  IndividualSignature sig;
};

}  // namespace

std::string_view to_string(VerificationMode mode) {
  return mode == VerificationMode::aggregated ? "aggregated" : "un_agg";
}

VerificationMode parse_verification_mode(std::string_view text) {
  if (text == "aggregated") return VerificationMode::aggregated;
  if (text == "un_agg") return VerificationMode::un_agg;
  throw ConfigError("mode: expected 'aggregated' or 'un_agg', got '" + std::string(text) + "'");
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.n_vehicles < 1) throw ConfigError("n_vehicles must be at least 1");
  if (cfg.data_size < 1) throw ConfigError("data_size must be at least 1");
  if (cfg.area_count < 1) throw ConfigError("area_count must be at least 1");
  if (!(cfg.corruption_rate >= 0.0 && cfg.corruption_rate <= 1.0)) {
    throw ConfigError("corruption_rate must be within [0, 1]");
  }
  if (cfg.seed.empty()) throw ConfigError("seed must not be empty");
}

ScenarioConfig scenario_from_text(std::string_view text) {
  ScenarioConfig cfg;
  KeyValueText kv;
  try {
    kv = KeyValueText::parse(text);
  } catch (const DecodeError& e) {
    throw ConfigError(e.what());
  }
  for (const auto& [key, value] : kv.entries()) {
    if (key == "n_vehicles") cfg.n_vehicles = parse_count(key, value);
    else if (key == "n_rounds") cfg.n_rounds = parse_count(key, value);
    else if (key == "data_size") cfg.data_size = parse_count(key, value);
    else if (key == "corruption_rate") cfg.corruption_rate = parse_rate(key, value);
    else if (key == "mode") cfg.mode = parse_verification_mode(value);
    else if (key == "seed") cfg.seed = value;
    else if (key == "area_count") cfg.area_count = parse_count(key, value);
    else throw ConfigError("unknown scenario key '" + key + "'");
  }
  validate(cfg);
  return cfg;
}

std::string scenario_to_text(const ScenarioConfig& cfg) {
  KeyValueText kv;
  kv.set("n_vehicles", std::to_string(cfg.n_vehicles));
  kv.set("n_rounds", std::to_string(cfg.n_rounds));
  kv.set("data_size", std::to_string(cfg.data_size));
  std::ostringstream rate;
  rate << cfg.corruption_rate;
  kv.set("corruption_rate", rate.str());
  kv.set("mode", std::string(to_string(cfg.mode)));
  kv.set("seed", cfg.seed);
  kv.set("area_count", std::to_string(cfg.area_count));
  return kv.str();
}

OpCounts SimulationReport::total_sign_ops() const {
  OpCounts total;
  for (const auto& r : rounds) total = total + r.sign_ops;
  return total;
}

OpCounts SimulationReport::total_verify_ops() const {
  OpCounts total;
  for (const auto& r : rounds) total = total + r.verify_ops;
  return total;
}

std::size_t SimulationReport::total_message_bytes() const {
  std::size_t total = 0;
  for (const auto& r : rounds) total += r.message_bytes;
  return total;
}

std::size_t SimulationReport::rounds_verified() const {
  return static_cast<std::size_t>(
      std::count_if(rounds.begin(), rounds.end(), [](const RoundRecord& r) { return r.verified; }));
}

std::string SimulationReport::to_csv() const {
  std::ostringstream out;
  out << "round,mode,vehicles,signatures,corrupted,rejected_at_rsu,groups,verified,"
         "sign_M,sign_H,sign_P,verify_M,verify_H,verify_P,message_bytes\n";
  for (const auto& r : rounds) {
    out << r.round << ',' << to_string(config.mode) << ',' << r.participants.size() << ','
        << r.signatures << ',' << r.corrupted << ',' << r.rejected_at_rsu << ',' << r.groups.size()
        << ',' << (r.verified ? "true" : "false") << ',' << r.sign_ops.mult << ','
        << r.sign_ops.hash << ',' << r.sign_ops.pairing << ',' << r.verify_ops.mult << ','
        << r.verify_ops.hash << ',' << r.verify_ops.pairing << ',' << r.message_bytes << '\n';
  }
  return out.str();
}

std::string SimulationReport::summary() const {
  std::ostringstream out;
  out << "mode " << to_string(config.mode) << ", " << config.n_vehicles << " vehicles, "
      << rounds.size() << " rounds, seed '" << config.seed << "'\n";
  for (const auto& r : rounds) {
    out << "round " << r.round << ": " << (r.verified ? "VALID" : "INVALID") << " ("
        << r.signatures << " signatures, " << r.groups.size() << " groups, " << r.message_bytes
        << " bytes";
    if (r.corrupted > 0) out << ", " << r.corrupted << " corrupted";
    if (r.rejected_at_rsu > 0) out << ", " << r.rejected_at_rsu << " rejected at RSU";
    out << ")\n";
    for (const auto& g : r.groups) {
      if (g.failed_ids.empty()) continue;
      out << "  " << g.area << " failed:";
      for (const auto& id : g.failed_ids) out << ' ' << id;
      out << '\n';
    }
  }
  const OpCounts s = total_sign_ops();
  const OpCounts v = total_verify_ops();
  out << "verified rounds: " << rounds_verified() << "/" << rounds.size() << '\n';
  out << "signing ops: M=" << s.mult << " H=" << s.hash << " P=" << s.pairing << '\n';
  out << "verification ops: M=" << v.mult << " H=" << v.hash << " P=" << v.pairing << '\n';
  out << "RSU -> data center bytes: " << total_message_bytes() << '\n';
  return out.str();
}

Simulation::Simulation(ScenarioConfig cfg)
    : cfg_(std::move(cfg)), master_(std::string_view(cfg_.seed)) {
  validate(cfg_);
  report_.config = cfg_;
  SeededRng setup_rng = master_.derive("setup");
  auto [params, msk] = setup(default_params(), setup_rng);
  scheme_ = std::make_unique<Mdbv>(std::move(params));
  msk_ = std::move(msk);
  for (std::size_t i = 1; i <= cfg_.n_vehicles; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "V%03zu", i);
    join_vehicle(id);
  }
}

bool Simulation::is_active(const std::string& id) const {
  return std::any_of(active_.begin(), active_.end(), [&](const auto& v) { return v.first == id; });
}

void Simulation::join_vehicle(const std::string& id) {
  if (id.empty()) throw StateError("vehicle id must not be empty");
  if (is_active(id)) throw StateError("vehicle " + id + " is already active");
  const std::size_t generation = registrations_[id]++;
  SeededRng rng = master_.derive("register/" + id + "/" + std::to_string(generation));
  Vehicle v{scheme_->register_vehicle(msk_, to_bytes(id), rng), joins_++ % cfg_.area_count};
  active_.emplace_back(id, std::move(v));
}

void Simulation::leave_vehicle(const std::string& id) {
  const auto it = std::find_if(active_.begin(), active_.end(), [&](const auto& v) { return v.first == id; });
  if (it == active_.end()) throw StateError("vehicle " + id + " is not active");
  active_.erase(it);
}

StateInfo Simulation::area_delta(std::size_t area, std::size_t round) const {
  return StateInfo(to_bytes("area-" + std::to_string(area) + "|epoch-" + std::to_string(round)));
}

void Simulation::run_rounds(std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) run_round();
}

const RoundRecord& Simulation::run_round() {
  ++round_;
  RoundRecord record;
  record.round = round_;
  SeededRng rng = master_.derive("round/" + std::to_string(round_));
  const Mdbv& scheme = *scheme_;
  const BilinearGroup& group = scheme.group();

  // Vehicles sign; the channel to the RSU may flip one bit per message.
  std::vector<InFlight> received;
  {
    OpCounter counter;
    ScopedOpCounter scope(&counter);
    for (const auto& [id, vehicle] : active_) {
      record.participants.push_back(id);
      StateInfo delta = area_delta(vehicle.area, round_);
      Bytes data = random_bytes(rng, cfg_.data_size);
      IndividualSignature sig = scheme.sign(data, delta, vehicle.creds, rng);
      ++record.signatures;
      ++report_.signatures_per_vehicle[id];
      InFlight msg{std::move(delta), BatchEntry{std::move(data), vehicle.creds.id, vehicle.creds.pub},
                   std::move(sig)};

      if (cfg_.corruption_rate > 0.0 && random_unit(rng) < cfg_.corruption_rate) {
        ++record.corrupted;
        record.corrupted_ids.push_back(id);
        if (random_u64(rng) % 2 == 0) {
          flip_bit(msg.entry.data, random_below(rng, msg.entry.data.size() * 8));
        } else {
          Bytes wire = group.serialize(msg.sig.r);
          const Bytes v = group.serialize(msg.sig.v);
          wire.insert(wire.end(), v.begin(), v.end());
          flip_bit(wire, random_below(rng, wire.size() * 8));
          const ByteView view(wire);
          try {
            msg.sig.r = group.deserialize(view.first(group.point_size()), "R");
            msg.sig.v = group.deserialize(view.last(group.point_size()), "V");
          } catch (const DecodeError&) {
            ++record.rejected_at_rsu;
            continue;
          }
        }
      }
      received.push_back(std::move(msg));
    }
    record.sign_ops = counter.snapshot();
  }

  // RSU: group by exact Δ.
  std::map<StateInfo, std::vector<const InFlight*>> groups;
  for (const auto& msg : received) groups[msg.delta].push_back(&msg);

  OpCounter verify_counter;
  bool all_valid = record.rejected_at_rsu == 0;
  for (const auto& [delta, msgs] : groups) {
    GroupRecord g;
    g.area = std::string(delta.bytes().begin(), delta.bytes().end());
    g.entries = msgs.size();

    std::vector<BatchEntry> entries;
    std::vector<IndividualSignature> sigs;
    for (const InFlight* m : msgs) {
      entries.push_back(m->entry);
      sigs.push_back(m->sig);
    }

    if (cfg_.mode == VerificationMode::aggregated) {
      const AggregateBatch batch = scheme.make_batch(delta, std::move(entries), sigs);
      const Bytes wire = serialize_batch(group, batch);
      record.message_bytes += wire.size();
      const AggregateBatch received_batch = deserialize_batch(group, wire);
      ScopedOpCounter scope(&verify_counter);
      g.valid = scheme.batch_verify(received_batch);
    } else {
      g.valid = true;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const AggregateBatch single = scheme.make_batch(delta, {entries[i]}, std::span(&sigs[i], 1));
        const Bytes wire = serialize_batch(group, single);
        record.message_bytes += wire.size();
        const AggregateBatch received_single = deserialize_batch(group, wire);
        const BatchEntry& e = received_single.entries.front();
        ScopedOpCounter scope(&verify_counter);
        if (!scheme.verify_individual(e.data, received_single.delta, e.id, e.pub,
                                      IndividualSignature{received_single.r, received_single.v})) {
          g.valid = false;
          g.failed_ids.push_back(id_text(e.id));
        }
      }
    }
    all_valid = all_valid && g.valid;
    record.groups.push_back(std::move(g));
  }
  record.verify_ops = verify_counter.snapshot();
  record.verified = all_valid && !record.groups.empty();

  report_.rounds.push_back(std::move(record));
  return report_.rounds.back();
}

SimulationReport run_scenario(const ScenarioConfig& cfg) {
  Simulation sim(cfg);
  sim.run_rounds(cfg.n_rounds);
  return sim.report();
}

bool ModeComparison::outcomes_agree() const {
  if (aggregated.rounds.size() != un_agg.rounds.size()) return false;
  for (std::size_t i = 0; i < aggregated.rounds.size(); ++i) {
    const RoundRecord& a = aggregated.rounds[i];
    const RoundRecord& b = un_agg.rounds[i];
    if (a.verified != b.verified || a.groups.size() != b.groups.size()) return false;
    for (std::size_t j = 0; j < a.groups.size(); ++j) {
      if (a.groups[j].area != b.groups[j].area || a.groups[j].valid != b.groups[j].valid) return false;
    }
  }
  return true;
}

ModeComparison compare_modes(ScenarioConfig cfg) {
  cfg.mode = VerificationMode::aggregated;
  SimulationReport aggregated = run_scenario(cfg);
  cfg.mode = VerificationMode::un_agg;
  SimulationReport un_agg = run_scenario(cfg);
  return {std::move(aggregated), std::move(un_agg)};
}

}  // namespace mdbv
