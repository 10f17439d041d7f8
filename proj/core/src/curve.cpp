#include "mdbv/curve.hpp"

#include <stdexcept>
#include <utility>

#include "mdbv/bigint.hpp"

namespace mdbv {

Curve::Curve(mpz_class p, mpz_class q, mpz_class cofactor)
    : field_(std::move(p)),
      q_(std::move(q)),
      cofactor_(std::move(cofactor)),
      order_bits_(bit_length(q_)),
      cofactor_bits_(bit_length(cofactor_)) {}

bool Curve::is_on_curve(const G1Point& a) const {
  if (a.infinity) return true;
  const mpz_class& p = field_.modulus();
  if (a.x < 0 || a.x >= p || a.y < 0 || a.y >= p) return false;
  const mpz_class rhs = field_.reduce(a.x * a.x * a.x + a.x);
  return field_.sqr(a.y) == rhs;
}

bool Curve::in_subgroup(const G1Point& a) const {
  return is_on_curve(a) && multiply(q_, a, order_bits_).is_identity();
}

G1Point Curve::neg(const G1Point& a) const {
  if (a.infinity) return a;
  return G1Point::affine(a.x, field_.neg(a.y));
}

G1Point Curve::add(const G1Point& a, const G1Point& b) const {
  if (a.infinity) return b;
  if (b.infinity) return a;
  const PrimeField& f = field_;
  if (a.x == b.x) {
    if (a.y == b.y && a.y != 0) return dbl(a);
    return G1Point::identity();
  }
  const mpz_class lambda = f.mul(f.sub(b.y, a.y), f.inv(f.sub(b.x, a.x)));
  mpz_class x3 = f.sub(f.sub(f.sqr(lambda), a.x), b.x);
  mpz_class y3 = f.sub(f.mul(lambda, f.sub(a.x, x3)), a.y);
  return G1Point::affine(std::move(x3), std::move(y3));
}

G1Point Curve::dbl(const G1Point& a) const {
  if (a.infinity || a.y == 0) return G1Point::identity();
  const PrimeField& f = field_;
  const mpz_class lambda = f.mul(f.reduce(3 * a.x * a.x + 1), f.inv(f.reduce(2 * a.y)));
  mpz_class x3 = f.sub(f.sqr(lambda), f.reduce(2 * a.x));
  mpz_class y3 = f.sub(f.mul(lambda, f.sub(a.x, x3)), a.y);
  return G1Point::affine(std::move(x3), std::move(y3));
}

Curve::Jacobian Curve::to_jacobian(const G1Point& a) const {
  if (a.infinity) return {1, 1, 0};
  return {a.x, a.y, 1};
}

G1Point Curve::to_affine(const Jacobian& a) const {
  if (a.Z == 0) return G1Point::identity();
  const PrimeField& f = field_;
  const mpz_class zi = f.inv(a.Z);
  const mpz_class zi2 = f.sqr(zi);
  return G1Point::affine(f.mul(a.X, zi2), f.mul(a.Y, f.mul(zi2, zi)));
}

Curve::Jacobian Curve::jdbl(const Jacobian& a) const {
  if (a.Z == 0 || a.Y == 0) return {1, 1, 0};
  const PrimeField& f = field_;
  const mpz_class yy = f.sqr(a.Y);
  const mpz_class zz = f.sqr(a.Z);
  const mpz_class s = f.reduce(4 * a.X * yy);
  const mpz_class m = f.reduce(3 * f.sqr(a.X) + f.sqr(zz));  // 3X² + a·Z⁴ with a = 1
  Jacobian r;
  r.X = f.sub(f.sqr(m), f.add(s, s));
  r.Y = f.reduce(m * (s - r.X) - 8 * f.sqr(yy));
  r.Z = f.reduce(2 * a.Y * a.Z);
  return r;
}

Curve::Jacobian Curve::jadd(const Jacobian& a, const Jacobian& b) const {
  if (a.Z == 0) return b;
  if (b.Z == 0) return a;
  const PrimeField& f = field_;
  const mpz_class z1z1 = f.sqr(a.Z);
  const mpz_class z2z2 = f.sqr(b.Z);
  const mpz_class u1 = f.mul(a.X, z2z2);
  const mpz_class u2 = f.mul(b.X, z1z1);
  const mpz_class s1 = f.mul(a.Y, f.mul(b.Z, z2z2));
  const mpz_class s2 = f.mul(b.Y, f.mul(a.Z, z1z1));
  const mpz_class h = f.sub(u2, u1);
  const mpz_class r = f.sub(s2, s1);
  if (h == 0) {
    if (r == 0) return jdbl(a);
    return {1, 1, 0};
  }
  const mpz_class hh = f.sqr(h);
  const mpz_class hhh = f.mul(h, hh);
  const mpz_class v = f.mul(u1, hh);
  Jacobian out;
  out.X = f.reduce(r * r - hhh - 2 * v);
  out.Y = f.reduce(r * (v - out.X) - s1 * hhh);
  out.Z = f.mul(f.mul(a.Z, b.Z), h);
  return out;
}

G1Point Curve::multiply(const mpz_class& k, const G1Point& a, std::size_t bits) const {
  if (k < 0) throw std::invalid_argument("Curve::multiply: negative scalar");
  if (bit_length(k) > bits) throw std::invalid_argument("Curve::multiply: scalar too long");
  Jacobian r0{1, 1, 0};
  Jacobian r1 = to_jacobian(a);
  for (std::size_t i = bits; i-- > 0;) {
    if (mpz_tstbit(k.get_mpz_t(), i)) {
      r0 = jadd(r0, r1);
      r1 = jdbl(r1);
    } else {
      r1 = jadd(r0, r1);
      r0 = jdbl(r0);
    }
  }
  return to_affine(r0);
}

G1Point Curve::multiply_mod_order(const mpz_class& k, const G1Point& a) const {
  mpz_class reduced;
  mpz_mod(reduced.get_mpz_t(), k.get_mpz_t(), q_.get_mpz_t());
  return multiply(reduced, a, order_bits_);
}

G1Point Curve::clear_cofactor(const G1Point& a) const {
  return multiply(cofactor_, a, cofactor_bits_);
}

std::optional<G1Point> Curve::lift_x(const mpz_class& x, bool odd_y) const {
  if (x < 0 || x >= field_.modulus()) return std::nullopt;
  const auto root = field_.sqrt(field_.reduce(x * x * x + x));
  if (!root) return std::nullopt;
  mpz_class y = *root;
  if (mpz_odd_p(y.get_mpz_t()) != static_cast<int>(odd_y)) y = field_.neg(y);
  return G1Point::affine(x, std::move(y));
}

}  // namespace mdbv
