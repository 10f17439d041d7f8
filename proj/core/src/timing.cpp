#include "mdbv/timing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "mdbv/errors.hpp"

namespace mdbv {
namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

TimingStat summarize(const std::vector<double>& samples) {
  TimingStat stat;
  stat.median_ms = median(samples);
  std::vector<double> dev;
  dev.reserve(samples.size());
  for (double s : samples) dev.push_back(std::abs(s - stat.median_ms));
  stat.mad_ms = median(std::move(dev));
  return stat;
}

template <typename F>
double time_ms(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

PrimitiveTimings measure_primitives(const BilinearGroup& group, std::size_t iterations,
                                    RandomSource& rng) {
  if (iterations < 100) throw DomainError("measure_primitives needs at least 100 iterations");

  std::vector<double> mult, hash, pairing;
  mult.reserve(iterations);
  hash.reserve(iterations);
  pairing.reserve(iterations);

  G1Point a = group.generator();
  G1Point b = group.generator();
  for (std::size_t i = 0; i < iterations; ++i) {
    const Scalar k = group.random_scalar(rng);
    const Bytes msg = random_bytes(rng, 32);
    G1Point product;
    mult.push_back(time_ms([&] { product = group.mul(k, a); }));
    G1Point hashed;
    hash.push_back(time_ms([&] { hashed = group.hash_to_point(msg); }));
    GtElement value;
    pairing.push_back(time_ms([&] { value = group.pair(product, b); }));
    b = std::move(a);
    a = std::move(hashed);
  }
  return PrimitiveTimings{summarize(mult), summarize(hash), summarize(pairing), iterations};
}

}  // namespace mdbv
