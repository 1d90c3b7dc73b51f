#include "liesimp/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace liesimp {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  // a, b in [0, p), p < 2^31: the product fits in a signed 64-bit integer.
  return (a * b) % p;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return r;
}

// Extended Euclid: returns x with a*x == 1 (mod p); a in [1, p).
std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r, r = t;
    t = old_s - q * s;
    old_s = s, s = t;
  }
  // old_r == gcd(a, p) == 1 because p is prime and a != 0 mod p.
  std::int64_t x = old_s % p;
  if (x < 0) x += p;
  return x;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_big_integer(std::string_view text, std::string_view context) {
  std::string_view t = trim(text);
  std::string_view digits = t;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    std::ostringstream os;
    os << "expected an integer in " << context << ", got '" << std::string(text) << "'";
    throw ValidationError(os.str());
  }
  return BigInt(std::string(t));
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Miller-Rabin with bases 2, 3, 5, 7: deterministic for n < 3'215'031'751,
  // which covers the whole admissible range p < 2^31.
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::int64_t a : {2, 3, 5, 7}) {
    std::int64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    std::ostringstream os;
    os << "prime field characteristic must be a prime below 2^31, got " << p;
    throw ValidationError(os.str());
  }
  return FieldSpec(FieldKind::prime_field, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (t == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (t.substr(0, prefix.size()) == prefix) {
    const BigInt p = parse_big_integer(t.substr(prefix.size()), "field spec");
    if (p < 2 || p >= (BigInt{1} << 31)) {
      throw ValidationError("field spec '" + std::string(t) + "': characteristic out of range");
    }
    return prime_field(static_cast<std::int64_t>(p));
  }
  throw ValidationError("unrecognized field spec '" + std::string(t) + "' (expected \"Q\" or \"Fp:<p>\")");
}

std::string FieldSpec::to_string() const {
  if (kind_ == FieldKind::rationals) return "Q";
  return "Fp:" + std::to_string(char_);
}

Scalar Scalar::zero(const FieldSpec& f) { return from_integer(f, 0); }

Scalar Scalar::one(const FieldSpec& f) { return from_integer(f, 1); }

Scalar Scalar::from_integer(const FieldSpec& f, std::int64_t n) {
  Scalar s(f);
  if (f.kind() == FieldKind::rationals) {
    s.rat_ = BigRational(n);
  } else {
    const std::int64_t p = f.characteristic();
    s.res_ = n % p;
    if (s.res_ < 0) s.res_ += p;
  }
  return s;
}

Scalar Scalar::from_big_integer(const FieldSpec& f, const BigInt& n) {
  Scalar s(f);
  if (f.kind() == FieldKind::rationals) {
    s.rat_ = BigRational(n);
  } else {
    BigInt r = n % f.characteristic();
    if (r < 0) r += f.characteristic();
    s.res_ = static_cast<std::int64_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Scalar s(FieldSpec::rationals());
  // cpp_rational reduces to lowest terms but refuses negative denominators,
  // so move the sign to the numerator first.
  s.rat_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  const std::string_view t = trim(text);
  const auto mod_pos = t.find(" mod ");
  if (mod_pos != std::string_view::npos) {
    if (f.kind() != FieldKind::prime_field) {
      throw ValidationError("residue notation '" + std::string(t) + "' is only valid over a prime field");
    }
    const BigInt value = parse_big_integer(t.substr(0, mod_pos), "scalar");
    const BigInt modulus = parse_big_integer(t.substr(mod_pos + 5), "scalar modulus");
    if (modulus != f.characteristic()) {
      throw ValidationError("scalar '" + std::string(t) + "' names modulus " + modulus.str() +
                            " but the field is " + f.to_string());
    }
    return from_big_integer(f, value);
  }
  const auto slash = t.find('/');
  if (slash != std::string_view::npos) {
    if (f.kind() != FieldKind::rationals) {
      throw ValidationError("fraction notation '" + std::string(t) + "' is only valid over Q");
    }
    const BigInt num = parse_big_integer(t.substr(0, slash), "scalar numerator");
    const BigInt den = parse_big_integer(t.substr(slash + 1), "scalar denominator");
    return from_rational(num, den);
  }
  return from_big_integer(f, parse_big_integer(t, "scalar"));
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::rationals ? rat_ == 1 : res_ == 1 % field_.characteristic();
}

Scalar Scalar::negated() const {
  Scalar s(field_);
  if (field_.kind() == FieldKind::rationals) {
    s.rat_ = -rat_;
  } else {
    s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ValidationError("division by zero in " + field_.to_string());
  Scalar s(field_);
  if (field_.kind() == FieldKind::rationals) {
    s.rat_ = 1 / rat_;
  } else {
    s.res_ = inverse_mod(res_, field_.characteristic());
  }
  return s;
}

const BigRational& Scalar::rational_value() const {
  if (field_.kind() != FieldKind::rationals) throw FieldMismatch("rational_value on a prime-field scalar");
  return rat_;
}

std::int64_t Scalar::residue_value() const {
  if (field_.kind() != FieldKind::prime_field) throw FieldMismatch("residue_value on a rational scalar");
  return res_;
}

std::string Scalar::to_string() const {
  if (field_.kind() == FieldKind::rationals) return rat_.str();
  return std::to_string(res_) + " mod " + std::to_string(field_.characteristic());
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) {
    throw FieldMismatch("scalars from different fields: " + a.field_.to_string() + " vs " + b.field_.to_string());
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s(a.field_);
  if (a.field_.kind() == FieldKind::rationals) {
    s.rat_ = a.rat_ + b.rat_;
  } else {
    s.res_ = (a.res_ + b.res_) % a.field_.characteristic();
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + b.negated(); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s(a.field_);
  if (a.field_.kind() == FieldKind::rationals) {
    s.rat_ = a.rat_ * b.rat_;
  } else {
    s.res_ = mul_mod(a.res_, b.res_, a.field_.characteristic());
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar& Scalar::operator+=(const Scalar& b) { return *this = *this + b; }
Scalar& Scalar::operator-=(const Scalar& b) { return *this = *this - b; }
Scalar& Scalar::operator*=(const Scalar& b) { return *this = *this * b; }

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  return a.field_.kind() == FieldKind::rationals ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

}  // namespace liesimp
