#include "mdbv/bigint.hpp"

#include <stdexcept>

#include "mdbv/errors.hpp"

namespace mdbv {

Bytes mpz_to_bytes(const mpz_class& value, std::size_t length) {
  if (value < 0) throw std::domain_error("mpz_to_bytes: negative value");
  const std::size_t needed = (bit_length(value) + 7) / 8;
  if (needed > length) throw std::length_error("mpz_to_bytes: value too large");
  Bytes out(length, 0);
  std::size_t written = 0;
  mpz_export(out.data() + (length - needed), &written, 1, 1, 1, 0, value.get_mpz_t());
  return out;
}

mpz_class mpz_from_bytes(ByteView bytes) {
  mpz_class v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

std::string mpz_to_hex(const mpz_class& value) { return value.get_str(16); }

mpz_class mpz_from_hex(std::string_view hex, const std::string& field) {
  if (hex.empty()) throw DecodeError(field, "empty integer");
  for (char c : hex) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
    if (!ok) throw DecodeError(field, "invalid hex integer");
  }
  return mpz_class(std::string(hex), 16);
}

}  // namespace mdbv
