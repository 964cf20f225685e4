#pragma once

// Raw arithmetic kernels behind DenseMatrix. Matrices store bare residues
// or bare mpq values; these policy structs carry the field and are passed
// into templated loops so the hot paths never touch Scalar.

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "core/error.hpp"
#include "core/exactfield.hpp"

namespace bdk::detail {

struct PrimeOps {
  std::uint32_t p;
  using value_type = std::uint32_t;

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  value_type add(value_type a, value_type b) const noexcept {
    const std::uint32_t s = a + b;  // both < 2^31
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + (p - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(" + std::to_string(p) + ")");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<value_type>(t);
  }
  value_type from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<value_type>(r);
  }
};

struct RationalOps {
  using value_type = mpq_class;

  value_type zero() const { return mpq_class(0); }
  value_type one() const { return mpq_class(1); }
  bool is_zero(const value_type& a) const noexcept { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q");
    return 1 / a;
  }
  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
};

template <class Fn>
decltype(auto) dispatch(const FieldSpec& field, Fn&& fn) {
  if (field.is_prime_field()) return std::forward<Fn>(fn)(PrimeOps{field.modulus()});
  return std::forward<Fn>(fn)(RationalOps{});
}

}  // namespace bdk::detail
