// Prime-field polynomial machinery: arithmetic, division, gcd, derivative,
// modular powers, and the distinct-irreducible-factor decomposition
// (squarefree reduction + distinct-degree + equal-degree splitting),
// including the p-th-power compression path where the derivative vanishes.

#include <cstdint>
#include <vector>

#include "doctest.h"

#include "liesimp/fppoly.hpp"

using namespace liesimp::fppoly;
using liesimp::BigInt;

namespace {

// Coefficients constant-term first: poly({1, 1}) is x + 1.
Poly poly(std::vector<std::int64_t> coeffs) { return coeffs; }

struct XorShift {
  std::uint64_t s;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

Poly random_poly(XorShift& rng, int max_degree, std::int64_t p) {
  Poly out(static_cast<std::size_t>(rng.next() % static_cast<std::uint64_t>(max_degree + 1)) + 1, 0);
  for (auto& c : out) c = static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(p));
  return normalize(std::move(out), p);
}

}  // namespace

TEST_CASE("normalize reduces residues and strips trailing zeros") {
  CHECK(normalize(poly({5, -1, 3, 0, 0}), 3) == poly({2, 2}));
  CHECK(normalize(poly({0, 0}), 5) == Poly{});
  CHECK(is_zero(normalize(poly({7}), 7)));
  CHECK(degree(Poly{}) == -1);
  CHECK(degree(poly({4})) == 0);
  CHECK(degree(poly({0, 0, 1})) == 2);
}

TEST_CASE("ring arithmetic: known products, additive inverses, Frobenius") {
  // (x + 1)^2 = x^2 + 2x + 1 over F_3, but x^2 + 1 over F_2.
  CHECK(mul(poly({1, 1}), poly({1, 1}), 3) == poly({1, 2, 1}));
  CHECK(mul(poly({1, 1}), poly({1, 1}), 2) == poly({1, 0, 1}));
  CHECK(add(poly({1, 2}), poly({2, 1}), 3) == Poly{});  // additive inverses
  CHECK(sub(poly({1, 2, 3}), poly({1, 2, 3}), 5) == Poly{});
  CHECK(mul(Poly{}, poly({1, 1}), 5) == Poly{});
  // Freshman's dream: (x + 2)^3 = x^3 + 2^3 = x^3 + 2 over F_3.
  const Poly cube = mul(mul(poly({2, 1}), poly({2, 1}), 3), poly({2, 1}), 3);
  CHECK(cube == poly({2, 0, 0, 1}));
}

TEST_CASE("divmod recombines exactly with a smaller remainder") {
  XorShift rng{0xdeadbeefcafeULL};
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Poly a = random_poly(rng, 6, p);
      Poly b = random_poly(rng, 4, p);
      if (is_zero(b)) b = poly({1, 1});
      const DivMod qr = divmod(a, b, p);
      CHECK(add(mul(qr.quotient, b, p), qr.remainder, p) == normalize(a, p));
      CHECK(degree(qr.remainder) < degree(b));
    }
  }
  // x^2 - 1 = (x - 1)(x + 1) exactly over F_5.
  const DivMod qr = divmod(poly({4, 0, 1}), poly({4, 1}), 5);  // (x^2 + 4) / (x + 4)
  CHECK(qr.quotient == poly({1, 1}));
  CHECK(is_zero(qr.remainder));
}

TEST_CASE("gcd is monic and divides both arguments") {
  // gcd((x+1)(x+2), (x+1)(x+3)) = x + 1 over F_5.
  const Poly a = mul(poly({1, 1}), poly({2, 1}), 5);
  const Poly b = mul(poly({1, 1}), poly({3, 1}), 5);
  CHECK(gcd(a, b, 5) == poly({1, 1}));
  // Scaling does not change the monic gcd.
  const Poly a3 = mul(a, poly({3}), 5);
  CHECK(gcd(a3, b, 5) == poly({1, 1}));
  CHECK(gcd(a, Poly{}, 5) == monic(a, 5));
  // Coprime inputs.
  CHECK(gcd(poly({1, 1}), poly({2, 1}), 5) == poly({1}));
}

TEST_CASE("derivative follows the power rule and vanishes on p-th powers") {
  CHECK(derivative(poly({2, 2, 0, 1}), 5) == poly({2, 0, 3}));  // d/dx(x^3 + 2x + 2)
  CHECK(is_zero(derivative(poly({1, 0, 0, 1}), 3)));            // d/dx(x^3 + 1) over F_3
  CHECK(is_zero(derivative(poly({1}), 7)));
  // d/dx((x^2+x+1)^2) = 0 over F_2.
  const Poly sq = mul(poly({1, 1, 1}), poly({1, 1, 1}), 2);
  CHECK(is_zero(derivative(sq, 2)));
}

TEST_CASE("pow_mod computes Frobenius powers") {
  const Poly f2_irred = poly({1, 1, 1});  // x^2 + x + 1, irreducible over F_2
  // x^2 mod (x^2+x+1) = x + 1; x^4 mod the same = x (Frobenius orbit closes).
  CHECK(pow_mod(poly({0, 1}), BigInt(2), f2_irred, 2) == poly({1, 1}));
  CHECK(pow_mod(poly({0, 1}), BigInt(4), f2_irred, 2) == poly({0, 1}));
  // Fermat: x^p = x mod (x^2 - x) over any p (both roots fixed).
  CHECK(pow_mod(poly({0, 1}), BigInt(5), poly({0, 4, 1}), 5) == poly({0, 1}));
  CHECK(pow_mod(poly({3, 1}), BigInt(0), f2_irred, 2) == poly({1}));
}

TEST_CASE("distinct irreducible factors on known factorizations") {
  // x^2 - 1 = (x + 1)(x + 4) over F_5.
  CHECK(distinct_irreducible_factors(poly({4, 0, 1}), 5, 1) ==
        std::vector<Poly>{poly({1, 1}), poly({4, 1})});

  // x^2 + 1 = (x + 1)^2 over F_2: repeated factor reported once.
  CHECK(distinct_irreducible_factors(poly({1, 0, 1}), 2, 1) == std::vector<Poly>{poly({1, 1})});

  // x^3 - x = x (x + 1) (x + 2) over F_3.
  CHECK(distinct_irreducible_factors(poly({0, 2, 0, 1}), 3, 1) ==
        std::vector<Poly>{poly({0, 1}), poly({1, 1}), poly({2, 1})});

  // x^2 + x + 1 is irreducible over F_2.
  CHECK(distinct_irreducible_factors(poly({1, 1, 1}), 2, 1) == std::vector<Poly>{poly({1, 1, 1})});

  // x^3 + 1 = (x + 1)(x^2 + x + 1) over F_2: mixed degrees, sorted by degree.
  CHECK(distinct_irreducible_factors(poly({1, 0, 0, 1}), 2, 1) ==
        std::vector<Poly>{poly({1, 1}), poly({1, 1, 1})});

  // x^2 + x = x (x + 1) over F_2 forces an equal-degree split with the trace map.
  CHECK(distinct_irreducible_factors(poly({0, 1, 1}), 2, 7) ==
        std::vector<Poly>{poly({0, 1}), poly({1, 1})});

  // Non-monic input: 2x^2 - 2 over F_5 has the same factors as x^2 - 1.
  CHECK(distinct_irreducible_factors(poly({3, 0, 2}), 5, 1) ==
        std::vector<Poly>{poly({1, 1}), poly({4, 1})});
}

TEST_CASE("p-th-power compression: zero-derivative polynomials factor correctly") {
  // (x^2 + x + 1)^2 = x^4 + x^2 + 1 over F_2 (derivative is zero).
  CHECK(distinct_irreducible_factors(poly({1, 0, 1, 0, 1}), 2, 1) ==
        std::vector<Poly>{poly({1, 1, 1})});

  // (x + 2)^6 = x^6 + x^3 + 1 over F_3 (a p-th power of a p-th power times itself).
  Poly sixth = poly({1});
  for (int i = 0; i < 6; ++i) sixth = mul(sixth, poly({2, 1}), 3);
  CHECK(sixth == poly({1, 0, 0, 1, 0, 0, 1}));
  CHECK(distinct_irreducible_factors(sixth, 3, 1) == std::vector<Poly>{poly({2, 1})});
}

TEST_CASE("factor lists are deterministic, seed-independent, and recombine") {
  XorShift rng{0x5eed5eed5eedULL};
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      Poly a = random_poly(rng, 5, p);
      if (degree(a) < 1) a = poly({1, 1});
      const auto f1 = distinct_irreducible_factors(a, p, 1);
      const auto f2 = distinct_irreducible_factors(a, p, 99);
      CHECK(f1 == f2);  // sorted output is seed-independent
      Poly product = poly({1});
      for (const Poly& f : f1) {
        product = mul(product, f, p);
        // Each factor is monic and divides a.
        CHECK(f.back() == 1);
        CHECK(is_zero(divmod(a, f, p).remainder));
        // Sorted by (degree, coefficients).
      }
      for (std::size_t i = 1; i < f1.size(); ++i) {
        const bool ordered = degree(f1[i - 1]) < degree(f1[i]) ||
                             (degree(f1[i - 1]) == degree(f1[i]) && f1[i - 1] < f1[i]);
        CHECK(ordered);
      }
      // The product of the distinct factors divides a, and a divides a power
      // of the product (same radical).
      CHECK(is_zero(divmod(a, product, p).remainder));
      Poly big = poly({1});
      for (int k = 0; k <= degree(a); ++k) big = mul(big, product, p);
      CHECK(is_zero(divmod(big, monic(a, p), p).remainder));
    }
  }
}
