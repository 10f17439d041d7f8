#pragma once

#include <cstddef>
#include <optional>

#include <gmpxx.h>

namespace mdbv {

// Element re + im·i of F_p[i]/(i² + 1). Components are canonical residues.
struct Fp2 {
  mpz_class re;
  mpz_class im;

  friend bool operator==(const Fp2& a, const Fp2& b) { return a.re == b.re && a.im == b.im; }
};

// Arithmetic in F_p and its quadratic extension F_p² for a prime p ≡ 3 mod 4
// (so that -1 is a non-residue and square roots are a single exponentiation).
// Inputs are expected to be canonical residues in [0, p); every result is.
class PrimeField {
 public:
  explicit PrimeField(mpz_class modulus);

  const mpz_class& modulus() const noexcept { return p_; }
  std::size_t byte_length() const noexcept { return byte_length_; }

  mpz_class reduce(const mpz_class& a) const;
  mpz_class add(const mpz_class& a, const mpz_class& b) const;
  mpz_class sub(const mpz_class& a, const mpz_class& b) const;
  mpz_class neg(const mpz_class& a) const;
  mpz_class mul(const mpz_class& a, const mpz_class& b) const;
  mpz_class sqr(const mpz_class& a) const;
  // Throws std::domain_error on zero.
  mpz_class inv(const mpz_class& a) const;
  mpz_class pow(const mpz_class& a, const mpz_class& e) const;

  bool is_square(const mpz_class& a) const;
  // Root r with r² = a, or nullopt for non-residues. Returns the root
  // a^((p+1)/4); callers choose parity themselves.
  std::optional<mpz_class> sqrt(const mpz_class& a) const;

  Fp2 one2() const { return Fp2{1, 0}; }
  Fp2 add(const Fp2& a, const Fp2& b) const;
  Fp2 sub(const Fp2& a, const Fp2& b) const;
  Fp2 mul(const Fp2& a, const Fp2& b) const;
  Fp2 sqr(const Fp2& a) const;
  Fp2 conj(const Fp2& a) const;
  // Throws std::domain_error on zero.
  Fp2 inv(const Fp2& a) const;
  Fp2 pow(const Fp2& a, const mpz_class& e) const;

 private:
  mpz_class p_;
  mpz_class sqrt_exponent_;  // (p + 1) / 4
  std::size_t byte_length_;
};

}  // namespace mdbv
