// Copyright 2026 The Authors.
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

#ifndef CELLFOREST_NUMBER_HPP_
#define CELLFOREST_NUMBER_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cellforest {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised by SmallInt when a result leaves the int64 range. Callers catch it
// and redo the computation over Integer.
class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("int64 overflow") {}
};

// Overflow-checked 64-bit integer. Used as the fast ring for the generic
// integer algorithms; every operation either returns the exact result or
// throws ArithmeticOverflow.
class SmallInt {
 public:
  constexpr SmallInt() = default;
  constexpr SmallInt(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design of the ring concept

  constexpr std::int64_t value() const { return v_; }

  friend SmallInt operator+(SmallInt a, SmallInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend SmallInt operator-(SmallInt a, SmallInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend SmallInt operator*(SmallInt a, SmallInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend SmallInt operator/(SmallInt a, SmallInt b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) {
      throw ArithmeticOverflow();
    }
    return a.v_ / b.v_;
  }
  friend SmallInt operator%(SmallInt a, SmallInt b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  SmallInt operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow();
    return -v_;
  }
  SmallInt& operator+=(SmallInt o) { return *this = *this + o; }
  SmallInt& operator-=(SmallInt o) { return *this = *this - o; }
  SmallInt& operator*=(SmallInt o) { return *this = *this * o; }
  SmallInt& operator/=(SmallInt o) { return *this = *this / o; }

  friend constexpr bool operator==(SmallInt, SmallInt) = default;
  friend constexpr auto operator<=>(SmallInt, SmallInt) = default;

 private:
  std::int64_t v_ = 0;
};

inline SmallInt abs(SmallInt x) { return x.value() < 0 ? -x : x; }
inline int sgn(SmallInt x) { return (x.value() > 0) - (x.value() < 0); }

// Floor division for both ring types (C++ and GMP '/' truncate).
template <class T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  T r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

template <class T>
T gcd_of(T a, T b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    T r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline bool fits_small(const Integer& x) { return x.fits_slong_p() != 0; }

inline Integer to_integer(SmallInt x) { return Integer(static_cast<long>(x.value())); }
inline Integer to_integer(const Integer& x) { return x; }

// Decimal string; rationals as "p/q", or "p" when the denominator is 1.
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Parses "p", "-p" or "p/q" into a normalized rational.
Rational parse_rational(std::string_view text);

// Returns the numerator when x is an integer; throws std::domain_error otherwise.
Integer require_integer(const Rational& x, std::string_view what);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace cellforest

#endif  // CELLFOREST_NUMBER_HPP_
