#pragma once

#include <cstddef>
#include <optional>

#include <gmpxx.h>

#include "mdbv/field.hpp"

namespace mdbv {

// Affine point on y² = x³ + x, or the point at infinity.
struct G1Point {
  mpz_class x;
  mpz_class y;
  bool infinity = true;

  static G1Point identity() { return {}; }
  static G1Point affine(mpz_class x, mpz_class y) { return {std::move(x), std::move(y), false}; }
  bool is_identity() const noexcept { return infinity; }

  friend bool operator==(const G1Point& a, const G1Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// Supersingular curve E: y² = x³ + x over F_p (p ≡ 3 mod 4), #E(F_p) = p + 1,
// with a distinguished subgroup of prime order q and p + 1 = cofactor · q.
class Curve {
 public:
  Curve(mpz_class p, mpz_class q, mpz_class cofactor);

  const PrimeField& field() const noexcept { return field_; }
  const mpz_class& order() const noexcept { return q_; }
  const mpz_class& cofactor() const noexcept { return cofactor_; }

  bool is_on_curve(const G1Point& a) const;
  // On the curve and annihilated by q.
  bool in_subgroup(const G1Point& a) const;

  G1Point add(const G1Point& a, const G1Point& b) const;
  G1Point dbl(const G1Point& a) const;
  G1Point neg(const G1Point& a) const;

  // k·A by a Montgomery ladder over exactly `bits` iterations (k must be
  // non-negative and below 2^bits); the sequence of group operations does
  // not depend on k's bit pattern.
  G1Point multiply(const mpz_class& k, const G1Point& a, std::size_t bits) const;
  // Ladder length = bit length of q; k is reduced mod q first.
  G1Point multiply_mod_order(const mpz_class& k, const G1Point& a) const;
  G1Point clear_cofactor(const G1Point& a) const;

  // Point with the given x and the root whose parity matches `odd_y`, or
  // nullopt when x³ + x is not a square.
  std::optional<G1Point> lift_x(const mpz_class& x, bool odd_y) const;

 private:
  struct Jacobian {
    mpz_class X, Y, Z;  // x = X/Z², y = Y/Z³; Z == 0 is infinity
  };

  Jacobian to_jacobian(const G1Point& a) const;
  G1Point to_affine(const Jacobian& a) const;
  Jacobian jadd(const Jacobian& a, const Jacobian& b) const;
  Jacobian jdbl(const Jacobian& a) const;

  PrimeField field_;
  mpz_class q_;
  mpz_class cofactor_;
  std::size_t order_bits_;
  std::size_t cofactor_bits_;
};

}  // namespace mdbv
