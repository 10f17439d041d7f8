#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mdbv/bilinear_group.hpp"
#include "mdbv/bytes.hpp"
#include "mdbv/params.hpp"
#include "mdbv/rng.hpp"

namespace mdbv {

// Published system parameters: the group and the KGC public key P0 = s·P.
struct SystemParams {
  GroupParams group;
  G1Point p0;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

struct MasterSecretKey {
  Scalar s;
};

// Everything a registered vehicle holds. (x, D) is the full private key,
// pub = x·P is published, q = H1(id).
struct VehicleCredentials {
  Bytes id;
  G1Point q;
  Scalar x;
  G1Point pub;
  G1Point d;

  friend bool operator==(const VehicleCredentials&, const VehicleCredentials&) = default;
};

// State information Δ shared by every signature that may be aggregated
// together. Never empty.
class StateInfo {
 public:
  // Throws DomainError on empty input.
  explicit StateInfo(Bytes delta);

  const Bytes& bytes() const noexcept { return delta_; }

  friend bool operator==(const StateInfo&, const StateInfo&) = default;
  friend auto operator<=>(const StateInfo&, const StateInfo&) = default;

 private:
  Bytes delta_;
};

struct IndividualSignature {
  G1Point r;
  G1Point v;

  friend bool operator==(const IndividualSignature&, const IndividualSignature&) = default;
};

struct BatchEntry {
  Bytes data;
  Bytes id;
  G1Point pub;

  friend bool operator==(const BatchEntry&, const BatchEntry&) = default;
};

// n signed data items under one Δ with the aggregate (R, V) = (Σ R_i, Σ V_i).
// Duplicate identities are allowed; n = 0 is not.
struct AggregateBatch {
  StateInfo delta;
  std::vector<BatchEntry> entries;
  G1Point r;
  G1Point v;

  friend bool operator==(const AggregateBatch&, const AggregateBatch&) = default;
};

struct BatchVerifyOptions {
  // Worker threads for the per-entry hashing and scalar multiplications.
  // The final sums are reduced in entry order, so the result does not
  // depend on this value.
  unsigned threads = 1;
};

// KGC initialisation over existing group parameters: s uniform in [1, q),
// P0 = s·P.
std::pair<SystemParams, MasterSecretKey> setup(const GroupParams& group, RandomSource& rng);
// Generates fresh group parameters for security level l (seeded from rng)
// first. Propagates ParameterError.
std::pair<SystemParams, MasterSecretKey> setup(unsigned security_level, RandomSource& rng);

// The five MDBV algorithms over fixed system parameters.
//
// Hash inputs are length-prefixed (4-byte big-endian length before each
// field), points enter in compressed form:
//   h_i = h2(data ‖ Δ ‖ ID_i),  g_i = h2(data ‖ Δ ‖ P_i),  U = H1(Δ ‖ P0).
class Mdbv {
 public:
  explicit Mdbv(SystemParams params);

  const SystemParams& params() const noexcept { return params_; }
  const BilinearGroup& group() const noexcept { return group_; }

  // KGC half of registration: (Q, D) = (H1(id), s·Q).
  std::pair<G1Point, G1Point> extract_partial_key(const MasterSecretKey& msk, ByteView id) const;
  // Full registration. Throws InvalidIdentityError on an empty id.
  VehicleCredentials register_vehicle(const MasterSecretKey& msk, ByteView id, RandomSource& rng) const;
  // e(D, P) == e(Q, P0), Q == H1(id) and pub == x·P.
  bool credentials_valid(const VehicleCredentials& creds) const;

  // R = r·P, V = g·D + (x·h + r)·U. Three scalar multiplications and one
  // map-to-point.
  IndividualSignature sign(ByteView data, const StateInfo& delta, const VehicleCredentials& creds,
                           RandomSource& rng) const;

  // e(V, P) == e(g·Q, P0) · e(h·P_i + R, U). Off-curve points throw
  // DecodeError rather than returning false.
  bool verify_individual(ByteView data, const StateInfo& delta, ByteView id, const G1Point& pub,
                         const IndividualSignature& sig) const;

  // Componentwise sums. Throws AggregationError on an empty list.
  IndividualSignature aggregate(std::span<const IndividualSignature> sigs) const;
  // Builds a batch from entries and their signatures (same length, non-empty).
  AggregateBatch make_batch(StateInfo delta, std::vector<BatchEntry> entries,
                            std::span<const IndividualSignature> sigs) const;

  // e(V, P) == e(Σ g_i·Q_i, P0) · e(Σ h_i·P_i + R, U): three pairings, 2n
  // scalar multiplications, n + 1 map-to-points. An empty batch or an
  // off-curve point throws DecodeError.
  bool batch_verify(const AggregateBatch& batch, const BatchVerifyOptions& options = {}) const;

  G1Point state_point(const StateInfo& delta) const;
  Scalar id_scalar(ByteView data, const StateInfo& delta, ByteView id) const;
  Scalar key_scalar(ByteView data, const StateInfo& delta, const G1Point& pub) const;

 private:
  void require_on_curve(const G1Point& point, const char* field) const;

  SystemParams params_;
  BilinearGroup group_;
  Bytes p0_encoded_;
};

}  // namespace mdbv
