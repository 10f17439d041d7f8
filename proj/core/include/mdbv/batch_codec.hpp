#pragma once

#include <cstddef>

#include "mdbv/bilinear_group.hpp"
#include "mdbv/bytes.hpp"
#include "mdbv/scheme.hpp"

namespace mdbv {

// Batch wire format, big-endian throughout:
//
//   "MDBV" | 0x01 | len(Δ):4 | Δ | n:4 |
//   n × [ len(id):4 | id | P_i (point) | len(data):4 | data ] |
//   R (point) | V (point)
//
// Points use BilinearGroup::serialize (|p| + 1 bytes, 65 at 512-bit p).
inline constexpr std::uint8_t kBatchFormatVersion = 0x01;

Bytes serialize_batch(const BilinearGroup& group, const AggregateBatch& batch);
// Rejects truncation, trailing bytes, n = 0, empty Δ or ids, and points
// that are off-curve or outside the subgroup. DecodeError::field() names the
// offending field, e.g. "entries[3].pub".
AggregateBatch deserialize_batch(const BilinearGroup& group, ByteView bytes);

// Size of the encoding from the layout above:
// 13 + |Δ| + n·(8 + point) + Σ|id| + Σ|data| + 2·point.
std::size_t batch_wire_size(std::size_t point_size, std::size_t delta_size, std::size_t n,
                            std::size_t total_id_bytes, std::size_t total_data_bytes);

}  // namespace mdbv
