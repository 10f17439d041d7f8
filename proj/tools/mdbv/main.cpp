#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "file_io.hpp"
#include "mdbv/errors.hpp"

using namespace mdbv::cli;

int main(int argc, char** argv) {
  CLI::App app{"MDBV certificateless aggregate signatures: keys, signing, verification, simulation"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  GenParamsOptions gen;
  auto* cmd_gen = app.add_subcommand("gen-params", "Generate pairing group parameters");
  cmd_gen->add_option("--level", gen.level, "Security level l (q > 2^l)")->capture_default_str();
  cmd_gen->add_option("--seed", gen.seed, "Deterministic seed");
  cmd_gen->add_option("--out", gen.out, "Output parameter file")->required();

  SetupOptions setup;
  auto* cmd_setup = app.add_subcommand("setup", "KGC setup: master key and system parameters");
  cmd_setup->add_option("--params", setup.params, "Group parameter file (default: built-in 512-bit set)");
  cmd_setup->add_option("--seed", setup.seed, "Deterministic seed");
  cmd_setup->add_option("--out", setup.out, "Output system parameter file")->required();
  cmd_setup->add_option("--msk", setup.msk, "Output master key file")->required();

  RegisterOptions reg;
  auto* cmd_reg = app.add_subcommand("register", "Issue vehicle credentials");
  cmd_reg->add_option("--params", reg.params, "System parameter file")->required();
  cmd_reg->add_option("--msk", reg.msk, "Master key file")->required();
  cmd_reg->add_option("--id", reg.id, "Vehicle identity")->required();
  cmd_reg->add_option("--seed", reg.seed, "Deterministic seed");
  cmd_reg->add_option("--out", reg.out, "Output credential file")->required();

  SignOptions sign;
  auto* cmd_sign = app.add_subcommand("sign", "Sign one datum under a state information");
  cmd_sign->add_option("--params", sign.params, "System parameter file")->required();
  cmd_sign->add_option("--creds", sign.creds, "Credential file")->required();
  cmd_sign->add_option("--delta", sign.delta_hex, "State information, hex")->required();
  cmd_sign->add_option("--data", sign.data, "File holding the datum")->required();
  cmd_sign->add_option("--seed", sign.seed, "Deterministic seed");
  cmd_sign->add_option("--out", sign.out, "Output signed-message file")->required();

  AggregateOptions agg;
  auto* cmd_agg = app.add_subcommand("aggregate", "Aggregate a directory of signed messages into a batch");
  cmd_agg->add_option("--params", agg.params, "System parameter file")->required();
  cmd_agg->add_option("dir", agg.in_dir, "Directory of signed-message files")->required();
  cmd_agg->add_option("--out", agg.out, "Output batch file")->required();

  VerifyOptions ver;
  auto* cmd_ver = app.add_subcommand("verify", "Verify a batch or a single signed message");
  cmd_ver->add_option("--params", ver.params, "System parameter file")->required();
  cmd_ver->add_option("input", ver.input, "Batch file or signed-message file")->required();
  cmd_ver->add_option("--threads", ver.threads, "Worker threads for batch verification")
      ->check(CLI::PositiveNumber);

  SimulateOptions sim;
  auto* cmd_sim = app.add_subcommand("simulate", "Run the vehicle / RSU / data center simulation");
  cmd_sim->add_option("--config", sim.config, "Scenario file (key=value)");
  cmd_sim->add_option("--n", sim.n, "Number of vehicles");
  cmd_sim->add_option("--rounds", sim.rounds, "Number of rounds");
  cmd_sim->add_option("--data-size", sim.data_size, "Bytes per datum");
  cmd_sim->add_option("--areas", sim.areas, "Number of areas (distinct state informations)");
  cmd_sim->add_option("--mode", sim.mode, "aggregated or un_agg");
  cmd_sim->add_option("--corruption", sim.corruption, "Per-message corruption probability");
  cmd_sim->add_option("--seed", sim.seed, "Scenario seed");
  cmd_sim->add_flag("--compare", sim.compare, "Run both verification modes");
  cmd_sim->add_option("--out", sim.out, "CSV report path (default: stdout)");

  BenchOptions bench;
  auto* cmd_bench = app.add_subcommand("bench", "Cost, size and energy model evaluation");
  cmd_bench->add_option("--fixtures", bench.fixtures, "paper, host, or a fixture file")->capture_default_str();
  cmd_bench->add_option("--scheme", bench.scheme, "Scheme name or 'all'")->capture_default_str();
  cmd_bench->add_option("--n", bench.n, "Batch sizes")->delimiter(',');
  cmd_bench->add_flag("--energy", bench.energy, "Print the energy table");
  cmd_bench->add_option("--out-dir", bench.out_dir, "Directory for costs.csv, sizes.csv, energy.csv");
  cmd_bench->add_option("--iterations", bench.iterations, "Iterations for host timing")
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench.seed, "Seed for host timing inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_gen) return run_gen_params(gen);
    if (*cmd_setup) return run_setup(setup);
    if (*cmd_reg) return run_register(reg);
    if (*cmd_sign) return run_sign(sign);
    if (*cmd_agg) return run_aggregate(agg);
    if (*cmd_ver) return run_verify(ver);
    if (*cmd_sim) return run_simulate(sim);
    if (*cmd_bench) return run_bench(bench);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const mdbv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
