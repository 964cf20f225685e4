#include "core/exactfield.hpp"

#include <charconv>

#include "core/error.hpp"
#include "core/fieldops.hpp"

namespace bdk {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidArgument,
                "field modulus must be a prime below 2^31, got " + std::to_string(p));
  return FieldSpec(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  if (is_prime_field()) return "GF(" + std::to_string(p_) + ")";
  return "Q";
}

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field.is_prime_field())
    value_ = std::uint32_t{0};
  else
    value_ = mpq_class(0);
}

Scalar Scalar::from_int(FieldSpec field, long long value) {
  Scalar s(field);
  if (field.is_prime_field())
    s.value_ = detail::PrimeOps{field.modulus()}.from_int(value);
  else
    s.value_ = mpq_class(static_cast<long>(value));
  return s;
}

Scalar Scalar::from_rational(mpq_class value) {
  value.canonicalize();
  Scalar s(FieldSpec::rationals());
  s.value_ = std::move(value);
  return s;
}

namespace {

std::string normalize_sign(std::string_view text) {
  std::string out(text);
  // U+2212 MINUS SIGN
  const std::string minus = "\xE2\x88\x92";
  if (out.rfind(minus, 0) == 0) out.replace(0, minus.size(), "-");
  return out;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  const std::string t = normalize_sign(text);
  if (field.is_prime_field()) {
    if (!is_integer_literal(t))
      throw Error(ErrorCode::Syntax, "not a residue literal: '" + std::string(text) + "'");
    mpz_class v(t.front() == '+' ? t.substr(1) : t, 10);
    mpz_class r = v % field.modulus();
    if (r < 0) r += field.modulus();
    Scalar s(field);
    s.value_ = static_cast<std::uint32_t>(r.get_ui());
    return s;
  }
  const auto slash = t.find('/');
  const std::string num = t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::Syntax, "not a rational literal: '" + std::string(text) + "'");
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class(num.front() == '+' ? num.substr(1) : num, 10), d);
  return from_rational(std::move(q));
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::MixedFields,
                "scalars from " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Scalar Scalar::operator-() const { return scalar_arith(Scalar(field_), *this, ArithOp::Sub); }
Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ArithOp::Add); }
Scalar operator-(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ArithOp::Sub); }
Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ArithOp::Mul); }
Scalar operator/(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ArithOp::Div); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  require_same_field(a, b);
  if (op == ArithOp::Div && b.is_zero())
    throw Error(ErrorCode::DivisionByZero, "division by zero in " + a.field().name());
  Scalar out(a.field());
  if (a.field().is_prime_field()) {
    const detail::PrimeOps ops{a.field().modulus()};
    const auto x = a.residue(), y = b.residue();
    std::uint32_t r = 0;
    switch (op) {
      case ArithOp::Add: r = ops.add(x, y); break;
      case ArithOp::Sub: r = ops.sub(x, y); break;
      case ArithOp::Mul: r = ops.mul(x, y); break;
      case ArithOp::Div: r = ops.mul(x, ops.inv(y)); break;
    }
    return Scalar::from_int(a.field(), r);
  }
  const mpq_class& x = a.rational();
  const mpq_class& y = b.rational();
  switch (op) {
    case ArithOp::Add: return Scalar::from_rational(x + y);
    case ArithOp::Sub: return Scalar::from_rational(x - y);
    case ArithOp::Mul: return Scalar::from_rational(x * y);
    case ArithOp::Div: return Scalar::from_rational(x / y);
  }
  return out;
}

Scalar scalar_inv(const Scalar& a) {
  return scalar_arith(Scalar::from_int(a.field(), 1), a, ArithOp::Div);
}

}  // namespace bdk
