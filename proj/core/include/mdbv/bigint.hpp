#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "mdbv/bytes.hpp"

namespace mdbv {

// Big-endian unsigned encoding, left-padded to exactly `length` bytes.
// Throws std::length_error if the value does not fit.
Bytes mpz_to_bytes(const mpz_class& value, std::size_t length);
mpz_class mpz_from_bytes(ByteView bytes);

// Lowercase hex without prefix; zero is "0".
std::string mpz_to_hex(const mpz_class& value);
// Throws DecodeError(field) on anything that is not non-empty hex.
mpz_class mpz_from_hex(std::string_view hex, const std::string& field);

inline std::size_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace mdbv
