#include "mdbv/params.hpp"

#include "mdbv/bigint.hpp"
#include "mdbv/errors.hpp"

namespace mdbv {
namespace {

constexpr int kPrimalityRounds = 64;
constexpr int kMaxPrimeAttempts = 200000;
constexpr int kMaxGeneratorAttempts = 1000;

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityRounds) > 0;
}

mpz_class random_prime(RandomSource& rng, unsigned bits) {
  for (int attempt = 0; attempt < kMaxPrimeAttempts; ++attempt) {
    mpz_class cand = random_bits(rng, bits);
    mpz_setbit(cand.get_mpz_t(), bits - 1);
    mpz_setbit(cand.get_mpz_t(), 0);
    if (is_probable_prime(cand)) return cand;
  }
  throw ParameterError("parameter generation: no " + std::to_string(bits) + "-bit prime found");
}

G1Point find_generator(const Curve& curve, RandomSource& rng) {
  const mpz_class& p = curve.field().modulus();
  for (int attempt = 0; attempt < kMaxGeneratorAttempts; ++attempt) {
    const mpz_class x = random_below(rng, p);
    const bool odd = (random_u64(rng) & 1) != 0;
    const auto point = curve.lift_x(x, odd);
    if (!point) continue;
    G1Point g = curve.clear_cofactor(*point);
    if (!g.is_identity()) return g;
  }
  throw ParameterError("parameter generation: no generator found");
}

// Sets built once per process from fixed seeds. Generation is deterministic,
// so these are reproducible; validate_params is run on them in tests.
constexpr const char* kDefaultParamsText =
#include "default_params.inc"
    ;

}  // namespace

ParamSizes sizes_for_security_level(unsigned security_level) {
  if (security_level < 80) {
    throw ParameterError("security level must be at least 80 bits");
  }
  unsigned p_bits = 0;
  if (security_level <= 80) {
    p_bits = 512;
  } else if (security_level <= 96) {
    p_bits = 768;
  } else if (security_level <= 112) {
    p_bits = 1024;
  } else if (security_level <= 128) {
    p_bits = 1536;
  } else {
    throw ParameterError("security levels above 128 bits are not supported");
  }
  return {2 * security_level, p_bits, security_level};
}

GroupParams generate_params(unsigned security_level, ByteView seed) {
  const ParamSizes sizes = sizes_for_security_level(security_level);
  SeededRng rng = SeededRng(seed).derive("group-params");
  return generate_params(sizes, rng);
}

GroupParams generate_params(const ParamSizes& sizes, RandomSource& rng) {
  if (sizes.q_bits <= sizes.security_level || sizes.p_bits < sizes.q_bits + 3) {
    throw ParameterError("inconsistent parameter sizes");
  }
  const mpz_class q = random_prime(rng, sizes.q_bits);

  // cofactor ≡ 0 mod 4 so that p = cofactor·q - 1 ≡ 3 mod 4.
  mpz_class lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 2, sizes.p_bits - 1);
  mpz_ui_pow_ui(hi.get_mpz_t(), 2, sizes.p_bits);
  lo = lo / q + 1;
  hi = hi / q;
  for (int attempt = 0; attempt < kMaxPrimeAttempts; ++attempt) {
    mpz_class h = lo + random_below(rng, hi - lo);
    h -= h % 4;
    const mpz_class p = h * q - 1;
    if (bit_length(p) != sizes.p_bits || h % q == 0) continue;
    if (!is_probable_prime(p)) continue;

    GroupParams params;
    params.p = p;
    params.q = q;
    params.cofactor = h;
    params.security_level = sizes.security_level;
    const Curve curve(p, q, h);
    params.generator = find_generator(curve, rng);
    validate_params(params, /*check_primality=*/false);
    return params;
  }
  throw ParameterError("parameter generation: no suitable base-field prime found");
}

const GroupParams& default_params() {
  static const GroupParams params = [] {
    KeyValueText kv = KeyValueText::parse(kDefaultParamsText);
    return read_params(kv);
  }();
  return params;
}

const GroupParams& toy_params() {
  static const GroupParams params = [] {
    SeededRng rng = SeededRng(std::string_view("mdbv-toy-params")).derive("group-params");
    return generate_params(ParamSizes{16, 32, 15}, rng);
  }();
  return params;
}

void validate_params(const GroupParams& params, bool check_primality) {
  const auto fail = [](const std::string& why) { throw ParameterError("invalid group parameters: " + why); };
  if (params.p <= 3 || params.p % 4 != 3) fail("p is not 3 mod 4");
  if (params.q <= 2) fail("q too small");
  if (params.p + 1 != params.cofactor * params.q) fail("p + 1 != cofactor * q");
  if (params.cofactor % params.q == 0) fail("q² divides the curve order");
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2, params.security_level);
  if (params.q <= bound) fail("q is not larger than 2^l");
  if (check_primality) {
    if (!is_probable_prime(params.p)) fail("p is not prime");
    if (!is_probable_prime(params.q)) fail("q is not prime");
  }
  const Curve curve(params.p, params.q, params.cofactor);
  if (params.generator.is_identity()) fail("generator is the identity");
  if (!curve.is_on_curve(params.generator)) fail("generator is not on the curve");
  if (!curve.multiply(params.q, params.generator, bit_length(params.q)).is_identity()) {
    fail("q * generator != identity");
  }
}

void write_params(KeyValueText& out, const GroupParams& params) {
  out.set("p", mpz_to_hex(params.p));
  out.set("q", mpz_to_hex(params.q));
  out.set("cofactor", mpz_to_hex(params.cofactor));
  out.set("Px", mpz_to_hex(params.generator.x));
  out.set("Py", mpz_to_hex(params.generator.y));
  out.set("l", mpz_to_hex(params.security_level));
}

GroupParams read_params(const KeyValueText& in) {
  GroupParams params;
  params.p = mpz_from_hex(in.get("p"), "p");
  params.q = mpz_from_hex(in.get("q"), "q");
  params.cofactor = mpz_from_hex(in.get("cofactor"), "cofactor");
  params.generator = G1Point::affine(mpz_from_hex(in.get("Px"), "Px"), mpz_from_hex(in.get("Py"), "Py"));
  const mpz_class l = mpz_from_hex(in.get("l"), "l");
  if (!l.fits_uint_p() || l > 4096) throw DecodeError("l", "security level out of range");
  params.security_level = static_cast<unsigned>(l.get_ui());
  validate_params(params, /*check_primality=*/true);
  return params;
}

std::string params_to_text(const GroupParams& params) {
  KeyValueText kv;
  write_params(kv, params);
  return kv.str();
}

GroupParams params_from_text(std::string_view text) {
  return read_params(KeyValueText::parse(text));
}

}  // namespace mdbv
