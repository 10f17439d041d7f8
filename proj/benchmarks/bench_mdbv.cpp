#include <benchmark/benchmark.h>

#include "mdbv/scheme.hpp"

namespace {

using namespace mdbv;

const BilinearGroup& group() {
  static const BilinearGroup g(default_params());
  return g;
}

struct Fixture {
  SystemParams params;
  MasterSecretKey msk;
  Mdbv scheme;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    SeededRng rng(std::string_view("bench"));
    auto [params, msk] = setup(default_params(), rng);
    Mdbv scheme(params);
    return Fixture{std::move(params), std::move(msk), std::move(scheme)};
  }();
  return f;
}

void BM_ScalarMul(benchmark::State& state) {
  SeededRng rng(std::string_view("mul"));
  const Scalar k = group().random_scalar(rng);
  for (auto _ : state) benchmark::DoNotOptimize(group().mul(k, group().generator()));
}
BENCHMARK(BM_ScalarMul)->Unit(benchmark::kMillisecond);

void BM_HashToPoint(benchmark::State& state) {
  std::uint32_t i = 0;
  for (auto _ : state) {
    Bytes msg;
    append_u32_be(msg, i++);
    benchmark::DoNotOptimize(group().hash_to_point(msg));
  }
}
BENCHMARK(BM_HashToPoint)->Unit(benchmark::kMillisecond);

void BM_Pairing(benchmark::State& state) {
  SeededRng rng(std::string_view("pair"));
  const G1Point a = group().mul(group().random_scalar(rng), group().generator());
  const G1Point b = group().mul(group().random_scalar(rng), group().generator());
  for (auto _ : state) benchmark::DoNotOptimize(group().pair(a, b));
}
BENCHMARK(BM_Pairing)->Unit(benchmark::kMillisecond);

void BM_Sign(benchmark::State& state) {
  const Fixture& f = fixture();
  SeededRng rng(std::string_view("sign"));
  const auto creds = f.scheme.register_vehicle(f.msk, to_bytes("V001"), rng);
  const StateInfo delta(to_bytes("area-0|epoch-1"));
  const Bytes data(20, 0x5a);
  for (auto _ : state) benchmark::DoNotOptimize(f.scheme.sign(data, delta, creds, rng));
}
BENCHMARK(BM_Sign)->Unit(benchmark::kMillisecond);

AggregateBatch make_batch(std::size_t n) {
  const Fixture& f = fixture();
  SeededRng rng(std::string_view("batch"));
  const StateInfo delta(to_bytes("area-0|epoch-1"));
  std::vector<BatchEntry> entries;
  std::vector<IndividualSignature> sigs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto creds = f.scheme.register_vehicle(f.msk, to_bytes("V" + std::to_string(i)), rng);
    Bytes data = random_bytes(rng, 20);
    sigs.push_back(f.scheme.sign(data, delta, creds, rng));
    entries.push_back({std::move(data), creds.id, creds.pub});
  }
  return f.scheme.make_batch(delta, std::move(entries), sigs);
}

void BM_BatchVerify(benchmark::State& state) {
  const AggregateBatch batch = make_batch(static_cast<std::size_t>(state.range(0)));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fixture().scheme.batch_verify(batch, {threads}));
}
BENCHMARK(BM_BatchVerify)
    ->ArgsProduct({{1, 5, 10, 20, 50}, {1}})
    ->Args({20, 4})
    ->Unit(benchmark::kMillisecond);

void BM_UnAggregatedVerify(benchmark::State& state) {
  const AggregateBatch batch = make_batch(static_cast<std::size_t>(state.range(0)));
  const std::size_t n = batch.entries.size();
  // Per-entry signatures are not kept in the batch; re-sign to get them.
  const Fixture& f = fixture();
  SeededRng rng(std::string_view("unagg"));
  std::vector<VehicleCredentials> creds;
  std::vector<IndividualSignature> sigs;
  for (std::size_t i = 0; i < n; ++i) {
    creds.push_back(f.scheme.register_vehicle(f.msk, batch.entries[i].id, rng));
    sigs.push_back(f.scheme.sign(batch.entries[i].data, batch.delta, creds.back(), rng));
  }
  for (auto _ : state) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      ok &= f.scheme.verify_individual(batch.entries[i].data, batch.delta, creds[i].id, creds[i].pub, sigs[i]);
    }
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_UnAggregatedVerify)->Arg(1)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
