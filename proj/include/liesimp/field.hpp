#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "liesimp/errors.hpp"

namespace liesimp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime_field };

/// Deterministic primality test, valid for 0 <= n < 2^31.
bool is_prime(std::int64_t n);

/// An exact coefficient field: the rationals, or a prime field F_p with
/// p < 2^31.  Text forms are "Q" and "Fp:<p>".
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }
  static FieldSpec prime_field(std::int64_t p);
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  /// 0 for the rationals, p for F_p.
  std::int64_t characteristic() const { return char_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind k, std::int64_t c) : kind_(k), char_(c) {}
  FieldKind kind_;
  std::int64_t char_;
};

/// An element of a FieldSpec field.  Rationals are always held in lowest
/// terms with positive denominator; prime-field residues in [0, p).
/// Text forms: "3/2", "-7" over Q; "4 mod 5" over F_5.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  /// The image of the integer n in the field.
  static Scalar from_integer(const FieldSpec& f, std::int64_t n);
  static Scalar from_big_integer(const FieldSpec& f, const BigInt& n);
  /// A rational num/den (field is Q); den must be nonzero.
  static Scalar from_rational(const BigInt& num, const BigInt& den);
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  Scalar negated() const;
  /// Multiplicative inverse; throws ValidationError on zero.
  Scalar inverse() const;
  const BigRational& rational_value() const;
  std::int64_t residue_value() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}
  static void require_same_field(const Scalar& a, const Scalar& b);

  FieldSpec field_;
  BigRational rat_{};      // active when field_ is Q
  std::int64_t res_ = 0;   // active when field_ is F_p
};

}  // namespace liesimp
