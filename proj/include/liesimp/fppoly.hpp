#pragma once

// Dense univariate polynomials over F_p (p an odd or even prime < 2^31),
// just enough machinery to factor minimal polynomials of matrices:
// arithmetic, gcd, and the distinct irreducible factors of a polynomial via
// squarefree reduction, distinct-degree factorization, and Cantor-Zassenhaus
// equal-degree splitting (trace map for p = 2).
//
// Coefficients are residues in [0, p), stored constant-term first with no
// trailing zeros; the zero polynomial is the empty vector.

#include <cstdint>
#include <random>
#include <vector>

#include "liesimp/field.hpp"

namespace liesimp::fppoly {

using Poly = std::vector<std::int64_t>;

Poly normalize(Poly a, std::int64_t p);
int degree(const Poly& a);
bool is_zero(const Poly& a);
Poly add(const Poly& a, const Poly& b, std::int64_t p);
Poly sub(const Poly& a, const Poly& b, std::int64_t p);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b, std::int64_t p);

Poly monic(const Poly& a, std::int64_t p);
// Monic gcd.
Poly gcd(Poly a, Poly b, std::int64_t p);
Poly derivative(const Poly& a, std::int64_t p);
// base^e mod modulus, with an arbitrary-precision exponent (needed for the
// (p^d - 1) / 2 powers of equal-degree splitting).
Poly pow_mod(const Poly& base, const BigInt& e, const Poly& modulus, std::int64_t p);

// The distinct monic irreducible factors of a nonconstant polynomial,
// sorted by (degree, coefficient sequence) for determinism.  Randomized
// splitting draws from the seeded generator but the result is exact.
std::vector<Poly> distinct_irreducible_factors(const Poly& a, std::int64_t p, std::uint64_t seed);

}  // namespace liesimp::fppoly
