#include "mdbv/scheme.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "mdbv/errors.hpp"
#include "mdbv/op_counter.hpp"

namespace mdbv {

StateInfo::StateInfo(Bytes delta) : delta_(std::move(delta)) {
  if (delta_.empty()) throw DomainError("state information must not be empty");
}

std::pair<SystemParams, MasterSecretKey> setup(const GroupParams& group, RandomSource& rng) {
  const BilinearGroup g(group);
  MasterSecretKey msk{g.random_scalar(rng)};
  SystemParams params{group, g.mul(msk.s, g.generator())};
  return {std::move(params), std::move(msk)};
}

std::pair<SystemParams, MasterSecretKey> setup(unsigned security_level, RandomSource& rng) {
  const Bytes seed = random_bytes(rng, 32);
  return setup(generate_params(security_level, seed), rng);
}

Mdbv::Mdbv(SystemParams params)
    : params_(std::move(params)), group_(params_.group), p0_encoded_(group_.serialize(params_.p0)) {
  if (params_.p0.is_identity() || !group_.in_subgroup(params_.p0)) {
    throw ParameterError("KGC public key must be a non-identity point of order q");
  }
}

std::pair<G1Point, G1Point> Mdbv::extract_partial_key(const MasterSecretKey& msk, ByteView id) const {
  if (id.empty()) throw InvalidIdentityError("vehicle identity must not be empty");
  G1Point q = group_.hash_to_point(id);
  G1Point d = group_.mul(msk.s, q);
  return {std::move(q), std::move(d)};
}

VehicleCredentials Mdbv::register_vehicle(const MasterSecretKey& msk, ByteView id,
                                          RandomSource& rng) const {
  auto [q, d] = extract_partial_key(msk, id);
  VehicleCredentials creds;
  creds.id.assign(id.begin(), id.end());
  creds.q = std::move(q);
  creds.d = std::move(d);
  creds.x = group_.random_scalar(rng);
  creds.pub = group_.mul(creds.x, group_.generator());
  return creds;
}

bool Mdbv::credentials_valid(const VehicleCredentials& creds) const {
  if (creds.id.empty()) return false;
  for (const G1Point* p : {&creds.q, &creds.pub, &creds.d}) {
    if (!group_.is_on_curve(*p)) return false;
  }
  if (group_.hash_to_point(creds.id) != creds.q) return false;
  if (group_.mul(creds.x, group_.generator()) != creds.pub) return false;
  return group_.pair(creds.d, group_.generator()) == group_.pair(creds.q, params_.p0);
}

G1Point Mdbv::state_point(const StateInfo& delta) const {
  Bytes input;
  append_length_prefixed(input, delta.bytes());
  append_length_prefixed(input, p0_encoded_);
  return group_.hash_to_point(input);
}

Scalar Mdbv::id_scalar(ByteView data, const StateInfo& delta, ByteView id) const {
  Bytes input;
  append_length_prefixed(input, data);
  append_length_prefixed(input, delta.bytes());
  append_length_prefixed(input, id);
  return group_.hash_to_scalar(input);
}

Scalar Mdbv::key_scalar(ByteView data, const StateInfo& delta, const G1Point& pub) const {
  Bytes input;
  append_length_prefixed(input, data);
  append_length_prefixed(input, delta.bytes());
  append_length_prefixed(input, group_.serialize(pub));
  return group_.hash_to_scalar(input);
}

IndividualSignature Mdbv::sign(ByteView data, const StateInfo& delta, const VehicleCredentials& creds,
                               RandomSource& rng) const {
  const Scalar r = group_.random_scalar(rng);
  const Scalar h = id_scalar(data, delta, creds.id);
  const Scalar g = key_scalar(data, delta, creds.pub);
  const G1Point u = state_point(delta);

  IndividualSignature sig;
  sig.r = group_.mul(r, group_.generator());
  const Scalar coeff = group_.add(group_.mul(creds.x, h), r);
  sig.v = group_.add(group_.mul(g, creds.d), group_.mul(coeff, u));
  return sig;
}

void Mdbv::require_on_curve(const G1Point& point, const char* field) const {
  if (!group_.is_on_curve(point)) throw DecodeError(field, "point is not on the curve");
}

bool Mdbv::verify_individual(ByteView data, const StateInfo& delta, ByteView id, const G1Point& pub,
                             const IndividualSignature& sig) const {
  require_on_curve(pub, "pub");
  require_on_curve(sig.r, "R");
  require_on_curve(sig.v, "V");
  if (id.empty()) throw DecodeError("id", "empty identity");

  const G1Point u = state_point(delta);
  const G1Point q = group_.hash_to_point(id);
  const Scalar h = id_scalar(data, delta, id);
  const Scalar g = key_scalar(data, delta, pub);

  const GtElement lhs = group_.pair(sig.v, group_.generator());
  const GtElement first = group_.pair(group_.mul(g, q), params_.p0);
  const GtElement second = group_.pair(group_.add(group_.mul(h, pub), sig.r), u);
  return lhs == group_.gt_mul(first, second);
}

IndividualSignature Mdbv::aggregate(std::span<const IndividualSignature> sigs) const {
  if (sigs.empty()) throw AggregationError("cannot aggregate an empty signature list");
  IndividualSignature out{G1Point::identity(), G1Point::identity()};
  for (const auto& sig : sigs) {
    out.r = group_.add(out.r, sig.r);
    out.v = group_.add(out.v, sig.v);
  }
  return out;
}

AggregateBatch Mdbv::make_batch(StateInfo delta, std::vector<BatchEntry> entries,
                                std::span<const IndividualSignature> sigs) const {
  if (entries.empty()) throw AggregationError("a batch needs at least one entry");
  if (entries.size() != sigs.size()) {
    throw AggregationError("entry and signature counts differ");
  }
  IndividualSignature agg = aggregate(sigs);
  return AggregateBatch{std::move(delta), std::move(entries), std::move(agg.r), std::move(agg.v)};
}

bool Mdbv::batch_verify(const AggregateBatch& batch, const BatchVerifyOptions& options) const {
  const std::size_t n = batch.entries.size();
  if (n == 0) throw DecodeError("entries", "batch has no entries");
  require_on_curve(batch.r, "R");
  require_on_curve(batch.v, "V");
  for (const auto& e : batch.entries) {
    require_on_curve(e.pub, "pub");
    if (e.id.empty()) throw DecodeError("id", "empty identity");
  }

  const G1Point u = state_point(batch.delta);

  // Per-entry terms g_i·Q_i and h_i·P_i.
  std::vector<G1Point> key_terms(n), id_terms(n);
  const auto compute = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const BatchEntry& e = batch.entries[i];
      const G1Point q = group_.hash_to_point(e.id);
      const Scalar h = id_scalar(e.data, batch.delta, e.id);
      const Scalar g = key_scalar(e.data, batch.delta, e.pub);
      key_terms[i] = group_.mul(g, q);
      id_terms[i] = group_.mul(h, e.pub);
    }
  };

  const unsigned threads = std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(n));
  if (threads == 1) {
    compute(0, n);
  } else {
    OpCounter* counter = active_op_counter();
    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> workers;
      for (std::size_t begin = 0, w = 0; begin < n; begin += chunk, ++w) {
        const std::size_t end = std::min(n, begin + chunk);
        workers.emplace_back([&, begin, end, w] {
          ScopedOpCounter scope(counter);
          try {
            compute(begin, end);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  G1Point s1 = G1Point::identity();
  G1Point s2 = batch.r;
  for (std::size_t i = 0; i < n; ++i) {
    s1 = group_.add(s1, key_terms[i]);
    s2 = group_.add(s2, id_terms[i]);
  }

  const GtElement lhs = group_.pair(batch.v, group_.generator());
  const GtElement rhs = group_.gt_mul(group_.pair(s1, params_.p0), group_.pair(s2, u));
  return lhs == rhs;
}

}  // namespace mdbv
