#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "mdbv/errors.hpp"
#include "mdbv/op_counter.hpp"
#include "test_support.hpp"

using namespace mdbv;
using mdbv::testing::DefaultSystem;

namespace {

struct Signed {
  VehicleCredentials creds;
  BatchEntry entry;
  IndividualSignature sig;
};

std::vector<Signed> sign_many(const DefaultSystem& sys, const StateInfo& delta, std::size_t n,
                              RandomSource& rng) {
  std::vector<Signed> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Bytes id = random_bytes(rng, 1 + random_below(rng, std::uint64_t{20}));
    auto creds = sys.scheme.register_vehicle(sys.msk, id, rng);
    Bytes data = random_bytes(rng, 20);
    auto sig = sys.scheme.sign(data, delta, creds, rng);
    BatchEntry entry{std::move(data), creds.id, creds.pub};
    out.push_back({std::move(creds), std::move(entry), sig});
  }
  return out;
}

AggregateBatch batch_of(const DefaultSystem& sys, const StateInfo& delta, const std::vector<Signed>& items) {
  std::vector<BatchEntry> entries;
  std::vector<IndividualSignature> sigs;
  for (const auto& s : items) {
    entries.push_back(s.entry);
    sigs.push_back(s.sig);
  }
  return sys.scheme.make_batch(delta, std::move(entries), sigs);
}

bool individually_valid(const DefaultSystem& sys, const StateInfo& delta, const std::vector<Signed>& items) {
  return std::all_of(items.begin(), items.end(), [&](const Signed& s) {
    return sys.scheme.verify_individual(s.entry.data, delta, s.entry.id, s.entry.pub, s.sig);
  });
}

}  // namespace

TEST(Setup, MasterKeyAndPublicKey) {
  const auto& sys = DefaultSystem::get();
  const auto& g = sys.scheme.group();
  EXPECT_FALSE(sys.params.p0.is_identity());
  EXPECT_TRUE(g.in_subgroup(sys.params.p0));
  EXPECT_EQ(sys.params.p0, g.mul(sys.msk.s, g.generator()));
  EXPECT_EQ(g.pair(sys.params.p0, g.generator()),
            g.gt_pow(g.pair(g.generator(), g.generator()), sys.msk.s.value));
}

TEST(Setup, DistinctSeedsGiveDistinctKeys) {
  std::vector<mpz_class> seen;
  for (int i = 0; i < 100; ++i) {
    SeededRng rng(std::string_view("setup-" + std::to_string(i)));
    const auto [params, msk] = setup(toy_params(), rng);
    EXPECT_GE(msk.s.value, 1);
    EXPECT_LT(msk.s.value, toy_params().q);
    seen.push_back(msk.s.value);
  }
  std::sort(seen.begin(), seen.end());
  // 100 draws from a 16-bit range: a handful of birthday collisions at most.
  EXPECT_GT(std::unique(seen.begin(), seen.end()) - seen.begin(), 90);
}

TEST(Setup, RejectsLowSecurityLevel) {
  SeededRng rng(std::string_view("x"));
  EXPECT_THROW(setup(40u, rng), ParameterError);
}

TEST(Register, PartialKeyValidity) {
  const auto& sys = DefaultSystem::get();
  const auto& g = sys.scheme.group();
  SeededRng rng(std::string_view("register"));
  const auto creds = sys.scheme.register_vehicle(sys.msk, to_bytes("V001"), rng);
  EXPECT_EQ(creds.q, g.hash_to_point(to_bytes("V001")));
  EXPECT_EQ(creds.d, g.mul(sys.msk.s, creds.q));
  EXPECT_EQ(creds.pub, g.mul(creds.x, g.generator()));
  EXPECT_EQ(g.pair(creds.d, g.generator()), g.pair(creds.q, sys.params.p0));
  EXPECT_TRUE(sys.scheme.credentials_valid(creds));

  auto broken = creds;
  broken.d = g.add(broken.d, g.generator());
  EXPECT_FALSE(sys.scheme.credentials_valid(broken));
}

TEST(Register, SameIdentityTwice) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("register-twice"));
  const auto a = sys.scheme.register_vehicle(sys.msk, to_bytes("V001"), rng);
  const auto b = sys.scheme.register_vehicle(sys.msk, to_bytes("V001"), rng);
  EXPECT_EQ(a.q, b.q);
  EXPECT_EQ(a.d, b.d);
  EXPECT_NE(a.x, b.x);
  EXPECT_NE(a.pub, b.pub);
}

TEST(Register, EmptyIdentityRejected) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("empty"));
  EXPECT_THROW(sys.scheme.register_vehicle(sys.msk, Bytes{}, rng), InvalidIdentityError);
  EXPECT_THROW(StateInfo(Bytes{}), DomainError);
}

TEST(Sign, RoundTripAndFreshRandomness) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("sign"));
  const auto creds = sys.scheme.register_vehicle(sys.msk, to_bytes("V001"), rng);
  const StateInfo delta(to_bytes("area-1|epoch-1"));
  const Bytes data = to_bytes("speed=42");
  const auto s1 = sys.scheme.sign(data, delta, creds, rng);
  const auto s2 = sys.scheme.sign(data, delta, creds, rng);
  EXPECT_NE(s1.r, s2.r);
  EXPECT_TRUE(sys.scheme.verify_individual(data, delta, creds.id, creds.pub, s1));
  EXPECT_TRUE(sys.scheme.verify_individual(data, delta, creds.id, creds.pub, s2));
}

TEST(Sign, MatchesSigningEquation) {
  // V = g·D + (x·h + r)·U recomputed from the definitions with a known r.
  const auto& sys = DefaultSystem::get();
  const auto& g = sys.scheme.group();
  SeededRng rng(std::string_view("equation"));
  const auto creds = sys.scheme.register_vehicle(sys.msk, to_bytes("V042"), rng);
  const StateInfo delta(to_bytes("delta"));
  const Bytes data = to_bytes("payload");

  SeededRng replay(std::string_view("sign-r"));
  SeededRng replay2(std::string_view("sign-r"));
  const auto sig = sys.scheme.sign(data, delta, creds, replay);
  const Scalar r = g.random_scalar(replay2);

  Bytes h_in, g_in, u_in;
  for (Bytes* b : {&h_in, &g_in}) {
    append_length_prefixed(*b, data);
    append_length_prefixed(*b, delta.bytes());
  }
  append_length_prefixed(h_in, creds.id);
  append_length_prefixed(g_in, g.serialize(creds.pub));
  append_length_prefixed(u_in, delta.bytes());
  append_length_prefixed(u_in, g.serialize(sys.params.p0));
  const Scalar h = g.hash_to_scalar(h_in), gs = g.hash_to_scalar(g_in);
  const G1Point u = g.hash_to_point(u_in);

  EXPECT_EQ(sys.scheme.id_scalar(data, delta, creds.id), h);
  EXPECT_EQ(sys.scheme.key_scalar(data, delta, creds.pub), gs);
  EXPECT_EQ(sys.scheme.state_point(delta), u);
  EXPECT_EQ(sig.r, g.mul(r, g.generator()));
  EXPECT_EQ(sig.v, g.add(g.mul(gs, creds.d), g.mul(g.add(g.mul(creds.x, h), r), u)));
}

TEST(Sign, DeltaAndKeyBinding) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("binding"));
  const auto a = sys.scheme.register_vehicle(sys.msk, to_bytes("A"), rng);
  const auto b = sys.scheme.register_vehicle(sys.msk, to_bytes("B"), rng);
  const StateInfo d1(to_bytes("area-1|epoch-1")), d2(to_bytes("area-1|epoch-2"));
  const Bytes data = to_bytes("x");
  const auto sig = sys.scheme.sign(data, d1, a, rng);
  EXPECT_TRUE(sys.scheme.verify_individual(data, d1, a.id, a.pub, sig));
  EXPECT_FALSE(sys.scheme.verify_individual(data, d2, a.id, a.pub, sig));
  EXPECT_FALSE(sys.scheme.verify_individual(data, d1, b.id, a.pub, sig));
  EXPECT_FALSE(sys.scheme.verify_individual(data, d1, a.id, b.pub, sig));
  EXPECT_FALSE(sys.scheme.verify_individual(to_bytes("y"), d1, a.id, a.pub, sig));
}

TEST(Sign, OffCurveInputIsADecodeError) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("offcurve"));
  const auto a = sys.scheme.register_vehicle(sys.msk, to_bytes("A"), rng);
  const StateInfo d(to_bytes("d"));
  auto sig = sys.scheme.sign(to_bytes("x"), d, a, rng);
  sig.v.y += 1;
  EXPECT_THROW(sys.scheme.verify_individual(to_bytes("x"), d, a.id, a.pub, sig), DecodeError);
}

TEST(Sign, DataTamperFuzzing) {
  // 1000 single-bit flips in the signed datum, zero accepts (toy scale).
  const auto& sys = DefaultSystem::toy();
  SeededRng rng(std::string_view("fuzz"));
  const auto creds = sys.scheme.register_vehicle(sys.msk, to_bytes("V001"), rng);
  const StateInfo delta(to_bytes("area-1|epoch-1"));
  const Bytes data = random_bytes(rng, 20);
  const auto sig = sys.scheme.sign(data, delta, creds, rng);
  ASSERT_TRUE(sys.scheme.verify_individual(data, delta, creds.id, creds.pub, sig));
  std::size_t accepts = 0;
  for (int t = 0; t < 1000; ++t) {
    Bytes bad = data;
    const auto bit = random_below(rng, std::uint64_t{bad.size() * 8});
    bad[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    accepts += sys.scheme.verify_individual(bad, delta, creds.id, creds.pub, sig);
  }
  EXPECT_EQ(accepts, 0u);
}

TEST(Aggregate, SingletonPermutationAndSplit) {
  const auto& sys = DefaultSystem::get();
  const auto& g = sys.scheme.group();
  SeededRng rng(std::string_view("aggregate"));
  const StateInfo delta(to_bytes("d"));
  const auto items = sign_many(sys, delta, 6, rng);
  std::vector<IndividualSignature> sigs;
  for (const auto& s : items) sigs.push_back(s.sig);

  EXPECT_EQ(sys.scheme.aggregate(std::span(sigs).first(1)), sigs[0]);
  EXPECT_THROW(sys.scheme.aggregate({}), AggregationError);

  const auto whole = sys.scheme.aggregate(sigs);
  auto shuffled = sigs;
  std::reverse(shuffled.begin(), shuffled.end());
  std::rotate(shuffled.begin(), shuffled.begin() + 2, shuffled.end());
  EXPECT_EQ(sys.scheme.aggregate(shuffled), whole);

  for (std::size_t cut = 1; cut < sigs.size(); ++cut) {
    const auto a = sys.scheme.aggregate(std::span(sigs).first(cut));
    const auto b = sys.scheme.aggregate(std::span(sigs).subspan(cut));
    EXPECT_EQ(g.add(a.r, b.r), whole.r);
    EXPECT_EQ(g.add(a.v, b.v), whole.v);
  }
}

TEST(BatchVerify, CompletenessForSeveralSizes) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("complete"));
  for (std::size_t n : {1u, 2u, 5u, 20u, 50u}) {
    const StateInfo delta(random_bytes(rng, 16));
    const auto items = sign_many(sys, delta, n, rng);
    EXPECT_TRUE(sys.scheme.batch_verify(batch_of(sys, delta, items))) << "n=" << n;
  }
}

TEST(BatchVerify, SingleEntryMatchesIndividualCheck) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("single"));
  const StateInfo delta(to_bytes("d"));
  auto items = sign_many(sys, delta, 1, rng);
  EXPECT_EQ(sys.scheme.batch_verify(batch_of(sys, delta, items)), individually_valid(sys, delta, items));
  items[0].entry.data[0] ^= 1;
  EXPECT_FALSE(sys.scheme.batch_verify(batch_of(sys, delta, items)));
  EXPECT_EQ(sys.scheme.batch_verify(batch_of(sys, delta, items)), individually_valid(sys, delta, items));
}

TEST(BatchVerify, MixedDeltaBatchRejected) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("mixed"));
  const StateInfo d1(to_bytes("area-1|epoch-1")), d2(to_bytes("area-2|epoch-1"));
  auto items = sign_many(sys, d1, 3, rng);
  auto other = sign_many(sys, d2, 1, rng);
  items.push_back(other[0]);
  EXPECT_FALSE(sys.scheme.batch_verify(batch_of(sys, d1, items)));
  EXPECT_FALSE(sys.scheme.batch_verify(batch_of(sys, d2, items)));
}

TEST(BatchVerify, DuplicateIdentitiesAllowed) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("dup"));
  const StateInfo delta(to_bytes("d"));
  const auto creds = sys.scheme.register_vehicle(sys.msk, to_bytes("V001"), rng);
  std::vector<Signed> items;
  for (int i = 0; i < 3; ++i) {
    Bytes data = to_bytes("reading-" + std::to_string(i));
    auto sig = sys.scheme.sign(data, delta, creds, rng);
    items.push_back({creds, {std::move(data), creds.id, creds.pub}, sig});
  }
  EXPECT_TRUE(sys.scheme.batch_verify(batch_of(sys, delta, items)));
}

TEST(BatchVerify, EmptyBatchIsADecodeError) {
  const auto& sys = DefaultSystem::get();
  const AggregateBatch empty{StateInfo(to_bytes("d")), {}, G1Point::identity(), G1Point::identity()};
  EXPECT_THROW(sys.scheme.batch_verify(empty), DecodeError);
  EXPECT_THROW(sys.scheme.make_batch(StateInfo(to_bytes("d")), {}, {}), AggregationError);
}

TEST(BatchVerify, ThreadCountDoesNotChangeResult) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("threads"));
  const StateInfo delta(to_bytes("d"));
  auto items = sign_many(sys, delta, 7, rng);
  EXPECT_TRUE(sys.scheme.batch_verify(batch_of(sys, delta, items), {4}));
  items[5].entry.data[0] ^= 0x80;
  EXPECT_FALSE(sys.scheme.batch_verify(batch_of(sys, delta, items), {4}));
  EXPECT_FALSE(sys.scheme.batch_verify(batch_of(sys, delta, items), {1}));
}

TEST(BatchVerify, OracleEquivalenceOn500CorruptedToyBatches) {
  // One randomly corrupted member among 20 honest ones; the batch result
  // must equal the conjunction of the individual checks.
  const auto& sys = DefaultSystem::toy();
  const auto& g = sys.scheme.group();
  SeededRng rng(std::string_view("oracle-equivalence"));
  const StateInfo delta(to_bytes("area-1|epoch-1"));
  const auto honest = sign_many(sys, delta, 21, rng);
  std::size_t mismatches = 0, accepts = 0;
  for (int t = 0; t < 500; ++t) {
    auto items = honest;
    auto& victim = items[random_below(rng, std::uint64_t{items.size()})];
    switch (random_below(rng, std::uint64_t{4})) {
      case 0: victim.entry.data[random_below(rng, std::uint64_t{20})] ^= 1; break;
      case 1: victim.entry.id.push_back(0); break;
      case 2: victim.sig.r = g.add(victim.sig.r, g.generator()); break;
      default: victim.sig.v = g.add(victim.sig.v, g.generator()); break;
    }
    const bool batch = sys.scheme.batch_verify(batch_of(sys, delta, items));
    mismatches += batch != individually_valid(sys, delta, items);
    accepts += batch;
  }
  EXPECT_EQ(mismatches, 0u);
  EXPECT_EQ(accepts, 0u);
}

TEST(OpCounts, SigningIs3MPlus1H) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("count-sign"));
  const auto creds = sys.scheme.register_vehicle(sys.msk, to_bytes("V001"), rng);
  OpCounter counter;
  {
    ScopedOpCounter scope(&counter);
    (void)sys.scheme.sign(to_bytes("x"), StateInfo(to_bytes("d")), creds, rng);
  }
  EXPECT_EQ(counter.snapshot(), (OpCounts{3, 1, 0}));
}

TEST(OpCounts, BatchVerificationIs3PPlus2nMPlusNPlus1H) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("count-verify"));
  const StateInfo delta(to_bytes("d"));
  for (std::size_t n : {1u, 10u, 20u}) {
    const auto batch = batch_of(sys, delta, sign_many(sys, delta, n, rng));
    for (unsigned threads : {1u, 3u}) {
      OpCounter counter;
      {
        ScopedOpCounter scope(&counter);
        EXPECT_TRUE(sys.scheme.batch_verify(batch, {threads}));
      }
      EXPECT_EQ(counter.snapshot(), (OpCounts{2 * n, n + 1, 3})) << "n=" << n << " threads=" << threads;
    }
  }
}

TEST(OpCounts, IndividualVerificationOfNIs3nPPlus2nMPlus2nH) {
  const auto& sys = DefaultSystem::get();
  SeededRng rng(std::string_view("count-unagg"));
  const StateInfo delta(to_bytes("d"));
  const auto items = sign_many(sys, delta, 4, rng);
  OpCounter counter;
  {
    ScopedOpCounter scope(&counter);
    EXPECT_TRUE(individually_valid(sys, delta, items));
  }
  EXPECT_EQ(counter.snapshot(), (OpCounts{8, 8, 12}));
}
