#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mdbv {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view text);
std::string to_hex(ByteView bytes);
// Accepts upper or lower case; throws DecodeError(field) on odd length or
// non-hex characters.
Bytes from_hex(std::string_view hex, const std::string& field = "hex");

void append_u32_be(Bytes& out, std::uint32_t value);
// Appends the 4-byte big-endian length of `field` followed by its bytes.
void append_length_prefixed(Bytes& out, ByteView field);

// Sequential big-endian reader over a byte buffer. Every read names the
// field it is decoding so truncation errors point at the right place.
class ByteReader {
 public:
  explicit ByteReader(ByteView buffer) : buffer_(buffer) {}

  std::uint8_t read_u8(const std::string& field);
  std::uint32_t read_u32(const std::string& field);
  ByteView read(std::size_t count, const std::string& field);

  std::size_t remaining() const noexcept { return buffer_.size() - offset_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ByteView buffer_;
  std::size_t offset_ = 0;
};

}  // namespace mdbv
