#pragma once

#include <optional>
#include <vector>

#include "aus/exactlin.hpp"

namespace aus {

// Dense univariate polynomials over a field, coefficients low to high, no trailing zeros.
using Poly = std::vector<Scalar>;

Poly poly_trim(Field f, Poly p);
Poly poly_mul(Field f, const Poly& a, const Poly& b);
Poly poly_sub(Field f, const Poly& a, const Poly& b);
// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> poly_divmod(Field f, const Poly& a, const Poly& b);
// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd poly_ext_gcd(Field f, const Poly& a, const Poly& b);

// For a minimal polynomial m with a root lambda in the field and a coprime
// cofactor of positive degree, returns u with u = 1 mod (t-lambda)^k and u = 0 mod m/(t-lambda)^k.
// u(x) is then a nontrivial idempotent of k[x]. Returns nothing when no such split exists.
std::optional<Poly> crt_idempotent(Field f, const Poly& m);

}  // namespace aus
