#pragma once

#include <cstdint>
#include <string>

#include "fgr/errors.hpp"

namespace fgr {

using Weight = std::int64_t;

inline Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Weight checked_sub(Weight a, Weight b) {
  Weight r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline Weight checked_abs(Weight a) {
  if (a == INT64_MIN) throw OverflowError("overflow in abs");
  return a < 0 ? -a : a;
}

// Default bound on stored weights; leaves headroom for gadget constants and
// sums over long cycles.
inline constexpr Weight kDefaultWeightBound = Weight{1} << 40;

// Binomial coefficient with overflow checks.
Weight binomial(int n, int k);
Weight factorial(int n);

}  // namespace fgr
