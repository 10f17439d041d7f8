#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "mdbv/bytes.hpp"
#include "mdbv/curve.hpp"
#include "mdbv/kv_text.hpp"
#include "mdbv/rng.hpp"

namespace mdbv {

// Public description of the symmetric pairing group: E: y² = x³ + x over
// F_p with p + 1 = cofactor · q, and a generator of the order-q subgroup.
struct GroupParams {
  mpz_class p;
  mpz_class q;
  mpz_class cofactor;
  G1Point generator;
  unsigned security_level = 0;  // q > 2^security_level

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

struct ParamSizes {
  unsigned q_bits;
  unsigned p_bits;
  unsigned security_level;
};

// Sizes for a security level: q has 2l bits, p is 512 bits at l = 80 and
// grows with the F_p² discrete-log requirement above that. l must be in
// [80, 128].
ParamSizes sizes_for_security_level(unsigned security_level);

// Deterministic for a fixed seed. Throws ParameterError on l < 80 or when
// the bounded search is exhausted.
GroupParams generate_params(unsigned security_level, ByteView seed);
GroupParams generate_params(const ParamSizes& sizes, RandomSource& rng);

// The 160-bit q / 512-bit p set shipped with the library (seed
// "mdbv-default-params", l = 80).
const GroupParams& default_params();
// 16-bit q / 32-bit p set for brute-force cross-checks. Not secure.
const GroupParams& toy_params();

// Throws ParameterError describing the first violated invariant. With
// check_primality the probabilistic tests use 64 rounds.
void validate_params(const GroupParams& params, bool check_primality = true);

// `p=…`, `q=…`, `cofactor=…`, `Px=…`, `Py=…`, `l=…`, lowercase hex.
std::string params_to_text(const GroupParams& params);
// Parses and fully validates; throws DecodeError or ParameterError.
GroupParams params_from_text(std::string_view text);
void write_params(KeyValueText& out, const GroupParams& params);
GroupParams read_params(const KeyValueText& in);

}  // namespace mdbv
