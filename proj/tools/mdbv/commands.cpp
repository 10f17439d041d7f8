#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

#include "file_io.hpp"
#include "mdbv/batch_codec.hpp"
#include "mdbv/energy.hpp"
#include "mdbv/errors.hpp"
#include "mdbv/fixtures.hpp"
#include "mdbv/key_files.hpp"
#include "mdbv/params.hpp"
#include "mdbv/simulation.hpp"
#include "mdbv/timing.hpp"

namespace mdbv::cli {
namespace {

namespace fs = std::filesystem;

// Seeded stream per command, or OS entropy without --seed.
std::unique_ptr<RandomSource> make_rng(const std::optional<std::string>& seed, std::string_view label) {
  if (!seed) return std::make_unique<SystemRng>();
  return std::make_unique<SeededRng>(SeededRng(std::string_view(*seed)).derive(label));
}

// Runs a parser over a file's contents and prefixes any failure with the path.
template <typename F>
auto load(const std::string& path, F&& parse) {
  const std::string text = read_text(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw FileError(path + ": " + e.what());
  }
}

SystemParams load_system(const std::string& path) {
  return load(path, [](const std::string& t) { return system_params_from_text(t); });
}

bool looks_like_batch(const Bytes& b) {
  return b.size() >= 4 && b[0] == 'M' && b[1] == 'D' && b[2] == 'B' && b[3] == 'V';
}

}  // namespace

int run_gen_params(const GenParamsOptions& o) {
  Bytes seed;
  if (o.seed) {
    seed = to_bytes(*o.seed);
  } else {
    SystemRng rng;
    seed = random_bytes(rng, 32);
  }
  write_text(o.out, params_to_text(generate_params(o.level, seed)));
  return kExitOk;
}

int run_setup(const SetupOptions& o) {
  const GroupParams group =
      o.params ? load(*o.params, [](const std::string& t) { return params_from_text(t); }) : default_params();
  const auto rng = make_rng(o.seed, "setup");
  const auto [params, msk] = setup(group, *rng);
  write_text(o.out, system_params_to_text(params));
  write_text(o.msk, master_key_to_text(msk));
  return kExitOk;
}

int run_register(const RegisterOptions& o) {
  const Mdbv scheme(load_system(o.params));
  const MasterSecretKey msk =
      load(o.msk, [&](const std::string& t) { return master_key_from_text(t, scheme.group()); });
  const auto rng = make_rng(o.seed, "register/" + o.id);
  const VehicleCredentials creds = scheme.register_vehicle(msk, to_bytes(o.id), *rng);
  write_text(o.out, credentials_to_text(scheme, creds));
  return kExitOk;
}

int run_sign(const SignOptions& o) {
  const Mdbv scheme(load_system(o.params));
  const VehicleCredentials creds =
      load(o.creds, [&](const std::string& t) { return credentials_from_text(t, scheme); });
  const StateInfo delta(from_hex(o.delta_hex, "--delta"));
  const Bytes data = read_binary(o.data);
  const auto rng = make_rng(o.seed, "sign");
  const SignedMessage msg{delta, {data, creds.id, creds.pub}, scheme.sign(data, delta, creds, *rng)};
  write_text(o.out, signed_message_to_text(scheme.group(), msg));
  return kExitOk;
}

int run_aggregate(const AggregateOptions& o) {
  const Mdbv scheme(load_system(o.params));
  const auto files = list_files(o.in_dir);
  if (files.empty()) throw FileError(o.in_dir + ": no signature files");

  std::optional<StateInfo> delta;
  std::vector<BatchEntry> entries;
  std::vector<IndividualSignature> sigs;
  for (const auto& file : files) {
    SignedMessage msg = load(file.string(), [&](const std::string& t) {
      return signed_message_from_text(t, scheme.group());
    });
    if (!delta) {
      delta = msg.delta;
    } else if (!(msg.delta == *delta)) {
      throw FileError(file.string() + ": state information differs from " + files.front().string());
    }
    entries.push_back(std::move(msg.entry));
    sigs.push_back(msg.sig);
  }
  const AggregateBatch batch = scheme.make_batch(*delta, std::move(entries), sigs);
  write_binary(o.out, serialize_batch(scheme.group(), batch));
  return kExitOk;
}

int run_verify(const VerifyOptions& o) {
  const Mdbv scheme(load_system(o.params));
  const Bytes raw = read_binary(o.input);
  bool valid = false;
  try {
    if (looks_like_batch(raw)) {
      valid = scheme.batch_verify(deserialize_batch(scheme.group(), raw), {o.threads});
    } else {
      const SignedMessage msg = signed_message_from_text(std::string(raw.begin(), raw.end()), scheme.group());
      valid = scheme.verify_individual(msg.entry.data, msg.delta, msg.entry.id, msg.entry.pub, msg.sig);
    }
  } catch (const Error& e) {
    throw FileError(o.input + ": " + e.what());
  }
  std::cout << (valid ? "VALID" : "INVALID") << '\n';
  return valid ? kExitOk : kExitInvalid;
}

int run_simulate(const SimulateOptions& o) {
  ScenarioConfig cfg;
  if (o.config) cfg = load(*o.config, [](const std::string& t) { return scenario_from_text(t); });
  if (o.n) cfg.n_vehicles = *o.n;
  if (o.rounds) cfg.n_rounds = *o.rounds;
  if (o.data_size) cfg.data_size = *o.data_size;
  if (o.areas) cfg.area_count = *o.areas;
  if (o.mode) cfg.mode = parse_verification_mode(*o.mode);
  if (o.corruption) cfg.corruption_rate = *o.corruption;
  if (o.seed) cfg.seed = *o.seed;
  validate(cfg);

  std::string csv;
  bool all_valid = true;
  if (o.compare) {
    const ModeComparison cmp = compare_modes(cfg);
    csv = cmp.aggregated.to_csv();
    const std::string un_agg = cmp.un_agg.to_csv();
    csv += un_agg.substr(un_agg.find('\n') + 1);
    std::cout << cmp.aggregated.summary() << '\n' << cmp.un_agg.summary() << '\n';
    std::cout << "modes agree: " << (cmp.outcomes_agree() ? "yes" : "no") << '\n';
    all_valid = cmp.outcomes_agree() && cmp.aggregated.rounds_verified() == cmp.aggregated.rounds.size() &&
                cmp.un_agg.rounds_verified() == cmp.un_agg.rounds.size();
  } else {
    const SimulationReport report = run_scenario(cfg);
    csv = report.to_csv();
    std::cout << report.summary();
    all_valid = report.rounds_verified() == report.rounds.size();
  }
  if (o.out) {
    write_text(*o.out, csv);
  } else {
    std::cout << '\n' << csv;
  }
  return all_valid ? kExitOk : kExitInvalid;
}

namespace {

std::string replay_block(const PaperFixtures& f) {
  const SchemeCost& mdbv = CostModel::comparison_table().scheme("MDBV");
  const std::size_t msg1 = message_size(mdbv, 1, f.point_bytes, f.data_bytes);
  const std::size_t msg20 = message_size(mdbv, 20, f.point_bytes, f.data_bytes);
  const EnergySettings closed = paper_closed_form_settings(f);
  const auto mj = [](double v) { return format_decimal(v) + " mJ"; };

  std::ostringstream out;
  out << "reference replay\n";
  out << "  signed datum |R|+|V|+|data| (L=" << f.point_bytes << ", S=" << f.data_bytes
      << "): " << signed_datum_size(f.point_bytes, f.data_bytes) << " bytes\n";
  out << "  signed datum |R|+|V|+|data| (L=20, S=" << f.data_bytes
      << "): " << signed_datum_size(20, f.data_bytes) << " bytes\n";
  out << "  RSU tx energy, " << msg1 << "-byte message: "
      << mj(radio_energy(msg1, f.radio, RadioDirection::tx)) << '\n';
  out << "  data center rx energy, n=1 (" << msg1 << " bytes): "
      << mj(radio_energy(msg1, f.radio, RadioDirection::rx)) << '\n';
  out << "  data center rx energy, n=20 (" << msg20 << " bytes): "
      << mj(radio_energy(msg20, f.radio, RadioDirection::rx)) << '\n';
  out << "  data center compute energy, " << format_decimal(f.measured_verify_ms) << " ms: "
      << mj(compute_energy(f.measured_verify_ms, f.compute)) << '\n';
  for (std::size_t n : {1u, 20u}) {
    out << "  data center total (closed form), n=" << n << ": "
        << mj(total_energy(mdbv, n, f.timings, closed).total_mj()) << '\n';
  }
  out << "  MDBV signing, analytic: " << format_decimal(signing_ms(mdbv, f.timings)) << " ms\n";
  out << "  MDBV verification n=1, analytic: " << format_decimal(verification_ms(mdbv, f.timings, 1))
      << " ms\n";
  out << "measured-vs-analytic gaps\n" << format_timing_gaps(timing_gaps(f));
  return out.str();
}

}  // namespace

int run_bench(const BenchOptions& o) {
  for (std::size_t n : o.n) {
    if (n == 0) throw DomainError("--n must be at least 1");
  }
  const CostModel table = CostModel::comparison_table();
  const CostModel model = o.scheme == "all" ? table : CostModel({table.scheme(o.scheme)});

  PaperFixtures f = paper_fixtures();
  const bool host = o.fixtures == "host";
  if (host) {
    const BilinearGroup group(default_params());
    const auto rng = make_rng(o.seed, "bench");
    f.timings = measure_primitives(group, o.iterations, *rng);
    std::cout << "host primitive timings over " << f.timings.samples << " iterations (median / MAD, ms)\n";
    const auto row = [](const char* name, const TimingStat& s) {
      std::cout << "  " << name << ": " << format_decimal(s.median_ms, 4) << " / "
                << format_decimal(s.mad_ms, 4) << '\n';
    };
    row("M", f.timings.mult);
    row("H", f.timings.hash);
    row("P", f.timings.pairing);
    std::cout << "reference timings (ms): M=" << format_decimal(paper_fixtures().timings.mult.median_ms)
              << " H=" << format_decimal(paper_fixtures().timings.hash.median_ms)
              << " P=" << format_decimal(paper_fixtures().timings.pairing.median_ms) << '\n';
  } else if (o.fixtures != "paper") {
    f = load(o.fixtures, [](const std::string& t) { return fixtures_from_text(t); });
  }

  EnergySettings energy;
  energy.radio = f.radio;
  energy.compute = f.compute;
  energy.point_bytes = f.point_bytes;
  energy.data_bytes = f.data_bytes;

  const std::string costs = costs_csv(model, f.timings, o.n);
  const std::string sizes = sizes_csv(model, o.n, f.point_bytes, f.data_bytes);
  const std::string energy_table = energy_csv(model, f.timings, o.n, energy);

  if (!host) std::cout << replay_block(f) << '\n';
  if (host) {
    const SchemeCost& mdbv = table.scheme("MDBV");
    const double v1 = verification_ms(mdbv, f.timings, 1);
    std::cout << "host MDBV verification n=1: " << format_decimal(v1, 4) << " ms, "
              << format_decimal(compute_energy(v1, f.compute), 4) << " mJ at "
              << format_decimal(f.compute.voltage) << " V / " << format_decimal(f.compute.current_a)
              << " A\n\n";
  }

  if (o.out_dir) {
    fs::create_directories(*o.out_dir);
    write_text(fs::path(*o.out_dir) / "costs.csv", costs);
    write_text(fs::path(*o.out_dir) / "sizes.csv", sizes);
    write_text(fs::path(*o.out_dir) / "energy.csv", energy_table);
    std::cout << "wrote costs.csv, sizes.csv, energy.csv to " << *o.out_dir << '\n';
    if (o.energy) std::cout << '\n' << energy_table;
  } else {
    std::cout << costs << '\n' << sizes;
    if (o.energy) std::cout << '\n' << energy_table;
  }
  return kExitOk;
}

}  // namespace mdbv::cli
