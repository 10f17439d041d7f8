#pragma once

#include "mdbv/curve.hpp"
#include "mdbv/field.hpp"

namespace mdbv {

// Element of the order-q subgroup of F_p²*, the pairing's target group.
struct GtElement {
  Fp2 value;

  friend bool operator==(const GtElement& a, const GtElement& b) { return a.value == b.value; }
};

// Modified Tate pairing ê(A, B) = f_{q,A}(φ(B))^((p²-1)/q) with the
// distortion map φ(x, y) = (-x, i·y). Symmetric and non-degenerate on the
// order-q subgroup. Either argument at infinity yields 1.
//
// Vertical lines and projective scaling factors lie in F_p and vanish under
// the (p - 1) part of the final exponent, so the Miller loop drops them.
GtElement tate_pairing(const Curve& curve, const G1Point& a, const G1Point& b);

}  // namespace mdbv
