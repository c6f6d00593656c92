#pragma once

#include <cstdint>
#include <string>

#include "kronstab/error.hpp"

namespace kronstab {

/// Exact integer type for every coefficient and character value.
using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

inline Integer factorial(int n) {
  Integer out = 1;
  for (int k = 2; k <= n; ++k) out = checked_mul(out, k);
  return out;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer out = 1;
  // out stays C(n-k+j, j) after step j, so the division is exact
  for (int j = 1; j <= k; ++j) out = checked_mul(out, n - k + j) / j;
  return out;
}

}  // namespace kronstab
