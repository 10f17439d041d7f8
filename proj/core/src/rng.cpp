#include "mdbv/rng.hpp"

#include <stdexcept>

#include <openssl/rand.h>

#include "mdbv/bigint.hpp"
#include "mdbv/digest.hpp"

namespace mdbv {
namespace {

std::array<std::uint8_t, 32> derive_key(std::string_view domain, ByteView material) {
  Bytes buf = to_bytes(domain);
  append_length_prefixed(buf, material);
  return sha256(buf);
}

}  // namespace

SeededRng::SeededRng(ByteView seed) : key_(derive_key("mdbv-drbg", seed)) {}

SeededRng::SeededRng(std::string_view seed)
    : SeededRng(ByteView(reinterpret_cast<const std::uint8_t*>(seed.data()), seed.size())) {}

SeededRng SeededRng::derive(std::string_view label) const {
  Bytes material(key_.begin(), key_.end());
  append_length_prefixed(material, to_bytes(label));
  return SeededRng(FromKey{}, derive_key("mdbv-drbg-child", material));
}

void SeededRng::refill() {
  Bytes input(key_.begin(), key_.end());
  for (int shift = 56; shift >= 0; shift -= 8) {
    input.push_back(static_cast<std::uint8_t>(counter_ >> shift));
  }
  ++counter_;
  block_ = sha256(input);
  used_ = 0;
}

void SeededRng::fill(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    if (used_ == block_.size()) refill();
    byte = block_[used_++];
  }
}

void SystemRng::fill(std::span<std::uint8_t> out) {
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw std::runtime_error("system entropy source failed");
  }
}

std::uint64_t random_u64(RandomSource& rng) {
  std::array<std::uint8_t, 8> buf{};
  rng.fill(buf);
  std::uint64_t v = 0;
  for (auto b : buf) v = (v << 8) | b;
  return v;
}

double random_unit(RandomSource& rng) {
  return static_cast<double>(random_u64(rng) >> 11) * 0x1.0p-53;
}

std::uint64_t random_below(RandomSource& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("random_below: zero bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t v = random_u64(rng);
    if (v < limit) return v % bound;
  }
}

mpz_class random_bits(RandomSource& rng, unsigned bits) {
  Bytes buf = random_bytes(rng, (bits + 7) / 8);
  if (bits % 8 != 0 && !buf.empty()) {
    buf[0] &= static_cast<std::uint8_t>((1u << (bits % 8)) - 1);
  }
  return mpz_from_bytes(buf);
}

mpz_class random_below(RandomSource& rng, const mpz_class& bound) {
  if (bound <= 0) throw std::invalid_argument("random_below: non-positive bound");
  const auto bits = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  for (;;) {
    mpz_class v = random_bits(rng, bits);
    if (v < bound) return v;
  }
}

Bytes random_bytes(RandomSource& rng, std::size_t count) {
  Bytes out(count);
  rng.fill(out);
  return out;
}

}  // namespace mdbv
