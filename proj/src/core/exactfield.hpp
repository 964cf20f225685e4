#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace bdk {

enum class FieldKind { Rationals, PrimeField };

/// The scalar domain: the rationals or a prime field GF(p), 2 <= p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;  // the rationals

  static FieldSpec rationals() noexcept { return FieldSpec(); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }
  /// Zero for the rationals.
  std::uint32_t modulus() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of a FieldSpec in canonical form: a reduced fraction with
/// positive denominator, or the least nonnegative residue.
class Scalar {
 public:
  explicit Scalar(FieldSpec field = {});  // zero

  static Scalar from_int(FieldSpec field, long long value);
  static Scalar from_rational(mpq_class value);
  /// Accepts "a", "-a", "a/b" (also with U+2212 as the sign) for the
  /// rationals and any decimal integer for GF(p), reduced mod p.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only valid for prime-field scalars.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Only valid for rational scalars.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Throws MixedFields when the operands live in different fields and
/// DivisionByZero on division by zero.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
Scalar scalar_inv(const Scalar& a);

}  // namespace bdk
