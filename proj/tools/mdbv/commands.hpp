#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mdbv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

struct GenParamsOptions {
  unsigned level = 80;
  std::optional<std::string> seed;
  std::string out;
};

struct SetupOptions {
  std::optional<std::string> params;  // group parameter file; built-in set if absent
  std::optional<std::string> seed;
  std::string out;  // system parameters (group + P0)
  std::string msk;  // master key output
};

struct RegisterOptions {
  std::string params;  // system parameters
  std::string msk;
  std::string id;
  std::optional<std::string> seed;
  std::string out;
};

struct SignOptions {
  std::string params;
  std::string creds;
  std::string delta_hex;
  std::string data;  // file holding the datum
  std::optional<std::string> seed;
  std::string out;
};

struct AggregateOptions {
  std::string params;
  std::string in_dir;
  std::string out;
};

struct VerifyOptions {
  std::string params;
  std::string input;  // batch file or signed-message file
  unsigned threads = 1;
};

struct SimulateOptions {
  std::optional<std::string> config;
  std::optional<std::size_t> n;
  std::optional<std::size_t> rounds;
  std::optional<std::size_t> data_size;
  std::optional<std::size_t> areas;
  std::optional<std::string> mode;
  std::optional<double> corruption;
  std::optional<std::string> seed;
  bool compare = false;
  std::optional<std::string> out;  // CSV path
};

struct BenchOptions {
  std::string fixtures = "paper";  // paper | host | path to a fixture file
  std::string scheme = "all";
  std::vector<std::size_t> n{1, 5, 10, 20, 30, 40, 50};
  bool energy = false;
  std::optional<std::string> out_dir;
  std::size_t iterations = 1000;
  std::optional<std::string> seed;
};

int run_gen_params(const GenParamsOptions& o);
int run_setup(const SetupOptions& o);
int run_register(const RegisterOptions& o);
int run_sign(const SignOptions& o);
int run_aggregate(const AggregateOptions& o);
int run_verify(const VerifyOptions& o);
int run_simulate(const SimulateOptions& o);
int run_bench(const BenchOptions& o);

}  // namespace mdbv::cli
