#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include <gmpxx.h>

#include "mdbv/bytes.hpp"

namespace mdbv {

// Injected source of randomness. Nothing in the library reads a global RNG.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// Deterministic generator: output block i is SHA-256(key || be64(i)) with
// key = SHA-256("mdbv-drbg" || seed). Same seed, same stream.
class SeededRng final : public RandomSource {
 public:
  explicit SeededRng(ByteView seed);
  explicit SeededRng(std::string_view seed);

  // Independent child stream keyed by (this seed, label); does not consume
  // or depend on the parent's position.
  SeededRng derive(std::string_view label) const;

  void fill(std::span<std::uint8_t> out) override;

 private:
  struct FromKey {};
  SeededRng(FromKey, const std::array<std::uint8_t, 32>& key) : key_(key) {}
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::array<std::uint8_t, 32> block_{};
  std::uint64_t counter_ = 0;
  std::size_t used_ = block_.size();
};

// Operating-system entropy via OpenSSL.
class SystemRng final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

std::uint64_t random_u64(RandomSource& rng);
// Uniform in [0, 1).
double random_unit(RandomSource& rng);
// Uniform in [0, bound) by rejection sampling; bound must be positive.
std::uint64_t random_below(RandomSource& rng, std::uint64_t bound);
mpz_class random_below(RandomSource& rng, const mpz_class& bound);
// Exactly `bits` random bits (top bit not forced).
mpz_class random_bits(RandomSource& rng, unsigned bits);
Bytes random_bytes(RandomSource& rng, std::size_t count);

}  // namespace mdbv
