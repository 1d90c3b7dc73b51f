#include "liesimp/fppoly.hpp"

#include <algorithm>
#include <utility>

#include "liesimp/errors.hpp"

namespace liesimp::fppoly {

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InvariantBreach("non-invertible residue in polynomial arithmetic");
  return ((t % p) + p) % p;
}

}  // namespace

Poly normalize(Poly a, std::int64_t p) {
  for (auto& c : a) c = ((c % p) + p) % p;
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Poly& a) { return a.empty(); }

Poly add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return normalize(std::move(out), p);
}

Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  return normalize(std::move(out), p);
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return normalize(std::move(out), p);
}

DivMod divmod(const Poly& a, const Poly& b, std::int64_t p) {
  if (b.empty()) throw ValidationError("polynomial division by zero");
  Poly rem = a;
  const int db = degree(b);
  if (degree(a) < db) return {{}, rem};
  Poly quot(a.size() - b.size() + 1, 0);
  const std::int64_t lead_inv = mod_inverse(b.back(), p);
  for (int i = degree(rem); i >= db; --i) {
    const std::int64_t c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::int64_t q = (c * lead_inv) % p;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = ((slot - q * b[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  return {normalize(std::move(quot), p), normalize(std::move(rem), p)};
}

Poly monic(const Poly& a, std::int64_t p) {
  if (a.empty()) return a;
  const std::int64_t inv = mod_inverse(a.back(), p);
  Poly out = a;
  for (auto& c : out) c = (c * inv) % p;
  return out;
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
  a = normalize(std::move(a), p);
  b = normalize(std::move(b), p);
  while (!b.empty()) {
    Poly r = divmod(a, b, p).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = (a[i] * (static_cast<std::int64_t>(i) % p)) % p;
  return normalize(std::move(out), p);
}

Poly pow_mod(const Poly& base, const BigInt& e, const Poly& modulus, std::int64_t p) {
  if (e < 0) throw ValidationError("polynomial pow_mod requires a nonnegative exponent");
  Poly result{1};
  if (e == 0) return divmod(result, modulus, p).remainder;
  Poly b = divmod(base, modulus, p).remainder;
  const unsigned bits = boost::multiprecision::msb(e);
  for (int i = static_cast<int>(bits); i >= 0; --i) {
    result = divmod(mul(result, result, p), modulus, p).remainder;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
      result = divmod(mul(result, b, p), modulus, p).remainder;
  }
  return result;
}

namespace {

// f with f' = 0 is a polynomial in x^p; over F_p its p-th root keeps every
// p-th coefficient (Frobenius fixes the prime field).
Poly compress_pth_power(const Poly& f, std::int64_t p) {
  Poly out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % static_cast<std::size_t>(p) == 0) {
      out.push_back(f[i]);
    } else if (f[i] != 0) {
      throw InvariantBreach("polynomial with zero derivative is not a polynomial in x^p");
    }
  }
  return normalize(std::move(out), p);
}

// Product of the distinct monic irreducible factors (the radical).
Poly radical(Poly f, std::int64_t p) {
  f = monic(normalize(std::move(f), p), p);
  if (degree(f) <= 0) return {1};
  const Poly d = derivative(f, p);
  if (is_zero(d)) return radical(compress_pth_power(f, p), p);
  const Poly g = gcd(f, d, p);
  if (degree(g) == 0) return f;  // already squarefree
  // w carries (once each) the factors whose multiplicity is not divisible
  // by p; the rest stay in r with p-divisible multiplicity.
  const Poly w = divmod(f, g, p).quotient;
  Poly r = g;
  for (;;) {
    const Poly d2 = gcd(r, w, p);
    if (degree(d2) <= 0) break;
    r = divmod(r, d2, p).quotient;
  }
  if (degree(r) <= 0) return w;
  return mul(w, radical(compress_pth_power(r, p), p), p);
}

// Equal-degree splitting: f squarefree monic, all irreducible factors of
// degree d; returns the list of irreducible factors.
void equal_degree_split(const Poly& f, int d, std::int64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  for (;;) {
    Poly r(static_cast<std::size_t>(degree(f)), 0);
    for (auto& c : r) c = coeff(rng);
    r = normalize(std::move(r), p);
    if (degree(r) < 1) continue;
    Poly g = gcd(f, r, p);
    if (degree(g) == 0) {
      if (p == 2) {
        // Trace map: T(r) = r + r^2 + ... + r^(2^(d-1)) splits f.
        Poly t{};
        Poly power = divmod(r, f, p).remainder;
        for (int i = 0; i < d; ++i) {
          t = add(t, power, p);
          power = divmod(mul(power, power, p), f, p).remainder;
        }
        g = gcd(f, t, p);
      } else {
        const BigInt exponent = (boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
        const Poly s = pow_mod(r, exponent, f, p);
        g = gcd(f, sub(s, Poly{1}, p), p);
      }
    }
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).quotient, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> distinct_irreducible_factors(const Poly& a, std::int64_t p, std::uint64_t seed) {
  Poly f = monic(normalize(a, p), p);
  if (degree(f) < 1) throw ValidationError("factorization requires a nonconstant polynomial");
  f = radical(std::move(f), p);
  std::mt19937_64 rng(seed);
  std::vector<Poly> factors;
  // Distinct-degree stage: peel off the product of all degree-d factors.
  Poly x_power{0, 1};  // x^(p^d) mod f, advanced per round
  x_power = divmod(x_power, f, p).remainder;
  for (int d = 1; degree(f) >= 1 && 2 * d <= degree(f); ++d) {
    x_power = pow_mod(x_power, BigInt(p), f, p);
    const Poly g = gcd(f, sub(x_power, Poly{0, 1}, p), p);
    if (degree(g) > 0) {
      equal_degree_split(g, d, p, rng, factors);
      f = divmod(f, g, p).quotient;
      x_power = divmod(x_power, f, p).remainder;
    }
  }
  if (degree(f) >= 1) factors.push_back(f);
  std::sort(factors.begin(), factors.end(), [](const Poly& lhs, const Poly& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
  });
  return factors;
}

}  // namespace liesimp::fppoly
