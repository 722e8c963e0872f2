#pragma once

#include <cstdint>

#include "hcensus/errors.hpp"

// Overflow-checked 64-bit integer helpers. Every invariant in the library is
// an exact integer identity, so wraparound is treated as a hard error.
namespace hcensus::checked {

using i64 = std::int64_t;

inline i64 add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return out;
}

inline i64 sub(i64 a, i64 b) {
  i64 out;
  if (__builtin_sub_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return out;
}

inline i64 mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return out;
}

inline i64 sq(i64 a) { return mul(a, a); }

// Floor division for a possibly negative numerator; divisor must be positive.
inline i64 floor_div(i64 num, i64 den) {
  i64 q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

}  // namespace hcensus::checked
