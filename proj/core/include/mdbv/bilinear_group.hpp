#pragma once

#include <cstddef>
#include <string_view>

#include <gmpxx.h>

#include "mdbv/bytes.hpp"
#include "mdbv/curve.hpp"
#include "mdbv/pairing.hpp"
#include "mdbv/params.hpp"
#include "mdbv/rng.hpp"

namespace mdbv {

// Residue in [0, q).
struct Scalar {
  mpz_class value;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

// The symmetric bilinear group e: G1 × G1 → GT built from GroupParams.
// Immutable after construction and safe to share between threads.
//
// mul, pair and hash_to_point are the counted operations (M, P, H); they
// report to the thread's active OpCounter. Point additions, GT arithmetic
// and the internal cofactor clearing of hash_to_point are not counted.
class BilinearGroup {
 public:
  // Checks the structural invariants (not primality) and throws
  // ParameterError on failure.
  explicit BilinearGroup(GroupParams params);

  const GroupParams& params() const noexcept { return params_; }
  const Curve& curve() const noexcept { return curve_; }
  const G1Point& generator() const noexcept { return params_.generator; }
  const mpz_class& order() const noexcept { return params_.q; }

  Scalar scalar(const mpz_class& v) const;
  // Uniform in [1, q).
  Scalar random_scalar(RandomSource& rng) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;

  G1Point add(const G1Point& a, const G1Point& b) const { return curve_.add(a, b); }
  G1Point neg(const G1Point& a) const { return curve_.neg(a); }
  G1Point mul(const Scalar& k, const G1Point& a) const;
  bool is_on_curve(const G1Point& a) const { return curve_.is_on_curve(a); }
  bool in_subgroup(const G1Point& a) const { return curve_.in_subgroup(a); }

  GtElement pair(const G1Point& a, const G1Point& b) const;
  GtElement gt_one() const { return GtElement{curve_.field().one2()}; }
  GtElement gt_mul(const GtElement& a, const GtElement& b) const;
  GtElement gt_pow(const GtElement& a, const mpz_class& e) const;
  // GT elements have norm 1, so the inverse is the conjugate.
  GtElement gt_inv(const GtElement& a) const;

  // H1: try-and-increment. For c = 0, 1, … the candidate is read from
  // SHAKE256("MDBV-H1" ‖ msg ‖ be32(c)): the first max(64, |p|) bytes give x
  // mod p, the low bit of the next byte picks the root's parity. A square
  // x³ + x gives a point that is then multiplied by the cofactor; identity
  // results are skipped. Throws HashToPointError after 2^16 counters.
  G1Point hash_to_point(ByteView msg) const;
  // h2: SHA-256("MDBV-h2" ‖ msg) mod q; on zero, re-hash with a counter byte
  // 1, 2, … appended. Result in [1, q).
  Scalar hash_to_scalar(ByteView msg) const;

  // |p|-byte big-endian x followed by 0x02 (even y) / 0x03 (odd y); the
  // identity is |p| + 1 zero bytes.
  std::size_t point_size() const noexcept { return curve_.field().byte_length() + 1; }
  Bytes serialize(const G1Point& a) const;
  // Rejects bad length, bad tag, x ≥ p, off-curve x and points outside the
  // order-q subgroup with DecodeError(field).
  G1Point deserialize(ByteView bytes, const std::string& field = "point") const;

 private:
  GroupParams params_;
  Curve curve_;
  std::size_t hash_x_bytes_;
};

}  // namespace mdbv
