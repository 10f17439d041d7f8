#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "mdbv/bytes.hpp"

namespace mdbv {

std::array<std::uint8_t, 32> sha256(ByteView message);
// SHAKE256 extendable-output function.
Bytes shake256(ByteView message, std::size_t output_length);

}  // namespace mdbv
