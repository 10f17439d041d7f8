#include "mdbv/batch_codec.hpp"

#include <algorithm>
#include <array>

#include "mdbv/errors.hpp"

namespace mdbv {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'M', 'D', 'B', 'V'};

Bytes to_owned(ByteView v) { return Bytes(v.begin(), v.end()); }

}  // namespace

Bytes serialize_batch(const BilinearGroup& group, const AggregateBatch& batch) {
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kBatchFormatVersion);
  append_length_prefixed(out, batch.delta.bytes());
  append_u32_be(out, static_cast<std::uint32_t>(batch.entries.size()));
  for (const auto& e : batch.entries) {
    append_length_prefixed(out, e.id);
    const Bytes pub = group.serialize(e.pub);
    out.insert(out.end(), pub.begin(), pub.end());
    append_length_prefixed(out, e.data);
  }
  for (const G1Point* p : {&batch.r, &batch.v}) {
    const Bytes enc = group.serialize(*p);
    out.insert(out.end(), enc.begin(), enc.end());
  }
  return out;
}

AggregateBatch deserialize_batch(const BilinearGroup& group, ByteView bytes) {
  ByteReader in(bytes);
  const ByteView magic = in.read(kMagic.size(), "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw DecodeError("magic", "not an MDBV batch");
  }
  if (in.read_u8("version") != kBatchFormatVersion) {
    throw DecodeError("version", "unsupported format version");
  }
  const std::uint32_t delta_len = in.read_u32("delta_length");
  if (delta_len == 0) throw DecodeError("delta", "empty state information");
  StateInfo delta(to_owned(in.read(delta_len, "delta")));

  const std::uint32_t n = in.read_u32("n");
  if (n == 0) throw DecodeError("n", "batch has no entries");
  const std::size_t point_size = group.point_size();
  // Every entry needs at least 8 length bytes, a point and a 1-byte id.
  if (n > in.remaining() / (9 + point_size)) {
    throw DecodeError("n", "entry count exceeds the remaining input");
  }

  std::vector<BatchEntry> entries;
  entries.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::string prefix = "entries[" + std::to_string(i) + "].";
    BatchEntry e;
    const std::uint32_t id_len = in.read_u32(prefix + "id_length");
    if (id_len == 0) throw DecodeError(prefix + "id", "empty identity");
    e.id = to_owned(in.read(id_len, prefix + "id"));
    e.pub = group.deserialize(in.read(point_size, prefix + "pub"), prefix + "pub");
    const std::uint32_t data_len = in.read_u32(prefix + "data_length");
    e.data = to_owned(in.read(data_len, prefix + "data"));
    entries.push_back(std::move(e));
  }
  G1Point r = group.deserialize(in.read(point_size, "R"), "R");
  G1Point v = group.deserialize(in.read(point_size, "V"), "V");
  if (in.remaining() != 0) {
    throw DecodeError("trailing", std::to_string(in.remaining()) + " unexpected bytes after V");
  }
  return AggregateBatch{std::move(delta), std::move(entries), std::move(r), std::move(v)};
}

std::size_t batch_wire_size(std::size_t point_size, std::size_t delta_size, std::size_t n,
                            std::size_t total_id_bytes, std::size_t total_data_bytes) {
  return 4 + 1 + 4 + delta_size + 4 + n * (4 + point_size + 4) + total_id_bytes + total_data_bytes +
         2 * point_size;
}

}  // namespace mdbv
