// Copyright 2026 The qhorn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include "qhorn/error.hpp"

namespace qhorn {

using Int = std::int64_t;

// Integer helpers with mathematical rounding on negative operands and
// overflow detection. Desk-scale inputs never come close to the 64-bit
// range; an overflow throws instead of wrapping.

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw InternalError("integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("integer overflow in multiplication");
  return out;
}

/// floor(a / b) for b != 0.
inline Int floor_div(Int a, Int b) {
  if (b == 0) throw DomainError("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// ceil(a / b) for b != 0.
inline Int ceil_div(Int a, Int b) {
  if (b == 0) throw DomainError("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Representative of a mod m in [0, m).
inline Int pos_mod(Int a, Int m) {
  if (m <= 0) throw DomainError("modulus must be positive");
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace qhorn
