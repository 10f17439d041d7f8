#include "mdbv/bytes.hpp"

#include "mdbv/errors.hpp"

namespace mdbv {
namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes to_bytes(std::string_view text) { return Bytes(text.begin(), text.end()); }

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view hex, const std::string& field) {
  if (hex.size() % 2 != 0) throw DecodeError(field, "odd-length hex string");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw DecodeError(field, "invalid hex character");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

void append_u32_be(Bytes& out, std::uint32_t value) {
  out.push_back(static_cast<std::uint8_t>(value >> 24));
  out.push_back(static_cast<std::uint8_t>(value >> 16));
  out.push_back(static_cast<std::uint8_t>(value >> 8));
  out.push_back(static_cast<std::uint8_t>(value));
}

void append_length_prefixed(Bytes& out, ByteView field) {
  append_u32_be(out, static_cast<std::uint32_t>(field.size()));
  out.insert(out.end(), field.begin(), field.end());
}

std::uint8_t ByteReader::read_u8(const std::string& field) {
  return read(1, field)[0];
}

std::uint32_t ByteReader::read_u32(const std::string& field) {
  const ByteView b = read(4, field);
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
         (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
}

ByteView ByteReader::read(std::size_t count, const std::string& field) {
  if (count > remaining()) {
    throw DecodeError(field, "truncated input (need " + std::to_string(count) +
                                 " bytes, have " + std::to_string(remaining()) + ")");
  }
  ByteView out = buffer_.subspan(offset_, count);
  offset_ += count;
  return out;
}

}  // namespace mdbv
