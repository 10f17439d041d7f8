#include "mdbv/field.hpp"

#include <stdexcept>

#include "mdbv/bigint.hpp"

namespace mdbv {

PrimeField::PrimeField(mpz_class modulus)
    : p_(std::move(modulus)), byte_length_((bit_length(p_) + 7) / 8) {
  if (p_ <= 3 || p_ % 4 != 3) throw std::invalid_argument("PrimeField: need p ≡ 3 mod 4");
  sqrt_exponent_ = (p_ + 1) / 4;
}

mpz_class PrimeField::reduce(const mpz_class& a) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
  return r;
}

mpz_class PrimeField::add(const mpz_class& a, const mpz_class& b) const {
  mpz_class r = a + b;
  if (r >= p_) r -= p_;
  return r;
}

mpz_class PrimeField::sub(const mpz_class& a, const mpz_class& b) const {
  mpz_class r = a - b;
  if (r < 0) r += p_;
  return r;
}

mpz_class PrimeField::neg(const mpz_class& a) const {
  if (a == 0) return 0;
  return p_ - a;
}

mpz_class PrimeField::mul(const mpz_class& a, const mpz_class& b) const {
  mpz_class r;
  mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  return r;
}

mpz_class PrimeField::sqr(const mpz_class& a) const { return mul(a, a); }

mpz_class PrimeField::inv(const mpz_class& a) const {
  mpz_class r;
  if (a == 0 || mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0) {
    throw std::domain_error("PrimeField::inv: zero has no inverse");
  }
  return r;
}

mpz_class PrimeField::pow(const mpz_class& a, const mpz_class& e) const {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
  return r;
}

bool PrimeField::is_square(const mpz_class& a) const {
  return mpz_legendre(a.get_mpz_t(), p_.get_mpz_t()) >= 0;
}

std::optional<mpz_class> PrimeField::sqrt(const mpz_class& a) const {
  mpz_class r = pow(a, sqrt_exponent_);
  if (sqr(r) != a) return std::nullopt;
  return r;
}

Fp2 PrimeField::add(const Fp2& a, const Fp2& b) const {
  return {add(a.re, b.re), add(a.im, b.im)};
}

Fp2 PrimeField::sub(const Fp2& a, const Fp2& b) const {
  return {sub(a.re, b.re), sub(a.im, b.im)};
}

Fp2 PrimeField::mul(const Fp2& a, const Fp2& b) const {
  // Karatsuba: (a0 + a1 i)(b0 + b1 i) = (a0b0 - a1b1) + ((a0+a1)(b0+b1) - a0b0 - a1b1) i
  const mpz_class t0 = a.re * b.re;
  const mpz_class t1 = a.im * b.im;
  mpz_class cross = (a.re + a.im) * (b.re + b.im) - t0 - t1;
  mpz_class real = t0 - t1;
  return {reduce(real), reduce(cross)};
}

Fp2 PrimeField::sqr(const Fp2& a) const {
  // (a0 + a1 i)² = (a0 + a1)(a0 - a1) + 2 a0 a1 i
  mpz_class real = (a.re + a.im) * (a.re - a.im);
  mpz_class imag = 2 * a.re * a.im;
  return {reduce(real), reduce(imag)};
}

Fp2 PrimeField::conj(const Fp2& a) const { return {a.re, neg(a.im)}; }

Fp2 PrimeField::inv(const Fp2& a) const {
  const mpz_class norm_inv = inv(reduce(a.re * a.re + a.im * a.im));
  return {mul(a.re, norm_inv), mul(neg(a.im), norm_inv)};
}

Fp2 PrimeField::pow(const Fp2& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  Fp2 result = one2();
  for (std::size_t i = bit_length(e); i-- > 0;) {
    result = sqr(result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

}  // namespace mdbv
