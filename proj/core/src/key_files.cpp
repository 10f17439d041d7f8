#include "mdbv/key_files.hpp"

#include "mdbv/bigint.hpp"
#include "mdbv/errors.hpp"
#include "mdbv/kv_text.hpp"

namespace mdbv {
namespace {

G1Point read_point(const KeyValueText& kv, const BilinearGroup& group, const std::string& key) {
  return group.deserialize(from_hex(kv.get(key), key), key);
}

void write_point(KeyValueText& kv, const BilinearGroup& group, const std::string& key,
                 const G1Point& p) {
  kv.set(key, to_hex(group.serialize(p)));
}

Scalar read_scalar(const KeyValueText& kv, const BilinearGroup& group, const std::string& key) {
  const mpz_class v = mpz_from_hex(kv.get(key), key);
  if (v <= 0 || v >= group.order()) throw DecodeError(key, "scalar out of range [1, q)");
  return Scalar{v};
}

Bytes read_bytes(const KeyValueText& kv, const std::string& key) {
  Bytes b = from_hex(kv.get(key), key);
  if (b.empty()) throw DecodeError(key, "must not be empty");
  return b;
}

}  // namespace

std::string system_params_to_text(const SystemParams& params) {
  KeyValueText kv;
  write_params(kv, params.group);
  write_point(kv, BilinearGroup(params.group), "P0", params.p0);
  return kv.str();
}

SystemParams system_params_from_text(std::string_view text) {
  const KeyValueText kv = KeyValueText::parse(text);
  SystemParams params;
  params.group = read_params(kv);
  params.p0 = read_point(kv, BilinearGroup(params.group), "P0");
  if (params.p0.is_identity()) throw DecodeError("P0", "KGC public key is the identity");
  return params;
}

std::string master_key_to_text(const MasterSecretKey& msk) {
  KeyValueText kv;
  kv.set("s", mpz_to_hex(msk.s.value));
  return kv.str();
}

MasterSecretKey master_key_from_text(std::string_view text, const BilinearGroup& group) {
  return MasterSecretKey{read_scalar(KeyValueText::parse(text), group, "s")};
}

std::string credentials_to_text(const Mdbv& scheme, const VehicleCredentials& creds) {
  const BilinearGroup& group = scheme.group();
  KeyValueText kv;
  kv.set("id", to_hex(creds.id));
  kv.set("x", mpz_to_hex(creds.x.value));
  write_point(kv, group, "Q", creds.q);
  write_point(kv, group, "P", creds.pub);
  write_point(kv, group, "D", creds.d);
  return kv.str();
}

VehicleCredentials credentials_from_text(std::string_view text, const Mdbv& scheme) {
  const BilinearGroup& group = scheme.group();
  const KeyValueText kv = KeyValueText::parse(text);
  VehicleCredentials creds;
  creds.id = read_bytes(kv, "id");
  creds.x = read_scalar(kv, group, "x");
  creds.q = read_point(kv, group, "Q");
  creds.pub = read_point(kv, group, "P");
  creds.d = read_point(kv, group, "D");
  if (group.hash_to_point(creds.id) != creds.q) throw DecodeError("Q", "does not equal H1(id)");
  if (group.mul(creds.x, group.generator()) != creds.pub) throw DecodeError("P", "does not equal x·P");
  if (group.pair(creds.d, group.generator()) != group.pair(creds.q, scheme.params().p0)) {
    throw DecodeError("D", "partial private key does not match this KGC");
  }
  return creds;
}

std::string signed_message_to_text(const BilinearGroup& group, const SignedMessage& msg) {
  KeyValueText kv;
  kv.set("delta", to_hex(msg.delta.bytes()));
  kv.set("id", to_hex(msg.entry.id));
  write_point(kv, group, "P", msg.entry.pub);
  kv.set("data", to_hex(msg.entry.data));
  write_point(kv, group, "R", msg.sig.r);
  write_point(kv, group, "V", msg.sig.v);
  return kv.str();
}

SignedMessage signed_message_from_text(std::string_view text, const BilinearGroup& group) {
  const KeyValueText kv = KeyValueText::parse(text);
  SignedMessage msg{StateInfo(read_bytes(kv, "delta")), {}, {}};
  msg.entry.id = read_bytes(kv, "id");
  msg.entry.pub = read_point(kv, group, "P");
  msg.entry.data = from_hex(kv.get("data"), "data");
  msg.sig.r = read_point(kv, group, "R");
  msg.sig.v = read_point(kv, group, "V");
  return msg;
}

}  // namespace mdbv
