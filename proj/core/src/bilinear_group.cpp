#include "mdbv/bilinear_group.hpp"

#include <algorithm>

#include "mdbv/bigint.hpp"
#include "mdbv/digest.hpp"
#include "mdbv/errors.hpp"
#include "mdbv/op_counter.hpp"

namespace mdbv {
namespace {

constexpr std::string_view kH1Tag = "MDBV-H1";
constexpr std::string_view kH2Tag = "MDBV-h2";
constexpr std::uint32_t kMaxHashCounter = 1u << 16;

}  // namespace

BilinearGroup::BilinearGroup(GroupParams params)
    : params_(std::move(params)),
      curve_(params_.p, params_.q, params_.cofactor),
      hash_x_bytes_(std::max<std::size_t>(64, curve_.field().byte_length())) {
  validate_params(params_, /*check_primality=*/false);
}

Scalar BilinearGroup::scalar(const mpz_class& v) const {
  Scalar s;
  mpz_mod(s.value.get_mpz_t(), v.get_mpz_t(), params_.q.get_mpz_t());
  return s;
}

Scalar BilinearGroup::random_scalar(RandomSource& rng) const {
  return Scalar{1 + random_below(rng, params_.q - 1)};
}

Scalar BilinearGroup::add(const Scalar& a, const Scalar& b) const { return scalar(a.value + b.value); }

Scalar BilinearGroup::mul(const Scalar& a, const Scalar& b) const { return scalar(a.value * b.value); }

G1Point BilinearGroup::mul(const Scalar& k, const G1Point& a) const {
  if (auto* counter = active_op_counter()) counter->record_mult();
  return curve_.multiply_mod_order(k.value, a);
}

GtElement BilinearGroup::pair(const G1Point& a, const G1Point& b) const {
  if (auto* counter = active_op_counter()) counter->record_pairing();
  return tate_pairing(curve_, a, b);
}

GtElement BilinearGroup::gt_mul(const GtElement& a, const GtElement& b) const {
  return GtElement{curve_.field().mul(a.value, b.value)};
}

GtElement BilinearGroup::gt_pow(const GtElement& a, const mpz_class& e) const {
  return GtElement{curve_.field().pow(a.value, e)};
}

GtElement BilinearGroup::gt_inv(const GtElement& a) const {
  return GtElement{curve_.field().conj(a.value)};
}

G1Point BilinearGroup::hash_to_point(ByteView msg) const {
  if (auto* counter = active_op_counter()) counter->record_hash();
  Bytes input = to_bytes(kH1Tag);
  input.insert(input.end(), msg.begin(), msg.end());
  const std::size_t base = input.size();
  for (std::uint32_t c = 0; c < kMaxHashCounter; ++c) {
    input.resize(base);
    append_u32_be(input, c);
    const Bytes digest = shake256(input, hash_x_bytes_ + 1);
    const mpz_class x = curve_.field().reduce(mpz_from_bytes(ByteView(digest).first(hash_x_bytes_)));
    const bool odd = (digest[hash_x_bytes_] & 1) != 0;
    const auto point = curve_.lift_x(x, odd);
    if (!point) continue;
    G1Point out = curve_.clear_cofactor(*point);
    if (!out.is_identity()) return out;
  }
  throw HashToPointError("hash_to_point: counter exhausted");
}

Scalar BilinearGroup::hash_to_scalar(ByteView msg) const {
  Bytes input = to_bytes(kH2Tag);
  input.insert(input.end(), msg.begin(), msg.end());
  for (unsigned counter = 0;; ++counter) {
    if (counter > 0) input.push_back(static_cast<std::uint8_t>(counter));
    const auto digest = sha256(input);
    Scalar s = scalar(mpz_from_bytes(digest));
    if (s.value != 0) return s;
    if (counter > 0) input.pop_back();
    if (counter == 255) throw HashToPointError("hash_to_scalar: counter exhausted");
  }
}

Bytes BilinearGroup::serialize(const G1Point& a) const {
  const std::size_t len = curve_.field().byte_length();
  if (a.is_identity()) return Bytes(len + 1, 0);
  Bytes out = mpz_to_bytes(a.x, len);
  out.push_back(mpz_odd_p(a.y.get_mpz_t()) ? 0x03 : 0x02);
  return out;
}

G1Point BilinearGroup::deserialize(ByteView bytes, const std::string& field) const {
  const std::size_t len = curve_.field().byte_length();
  if (bytes.size() != len + 1) {
    throw DecodeError(field, "point encoding must be " + std::to_string(len + 1) + " bytes");
  }
  const std::uint8_t tag = bytes[len];
  const ByteView x_bytes = bytes.first(len);
  if (tag == 0x00) {
    if (std::any_of(x_bytes.begin(), x_bytes.end(), [](std::uint8_t b) { return b != 0; })) {
      throw DecodeError(field, "identity encoding with nonzero x");
    }
    return G1Point::identity();
  }
  if (tag != 0x02 && tag != 0x03) throw DecodeError(field, "invalid parity tag");
  const mpz_class x = mpz_from_bytes(x_bytes);
  if (x >= params_.p) throw DecodeError(field, "x coordinate not reduced");
  const auto point = curve_.lift_x(x, tag == 0x03);
  if (!point) throw DecodeError(field, "x coordinate is not on the curve");
  if (mpz_odd_p(point->y.get_mpz_t()) != (tag == 0x03)) {
    throw DecodeError(field, "parity does not match a curve point");
  }
  if (!curve_.multiply(params_.q, *point, bit_length(params_.q)).is_identity()) {
    throw DecodeError(field, "point is not in the order-q subgroup");
  }
  return *point;
}

}  // namespace mdbv
