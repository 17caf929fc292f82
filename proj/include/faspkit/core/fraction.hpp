// Copyright 2026 The faspkit Authors
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

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "faspkit/error.hpp"

namespace faspkit {

/// Exact signed rational over 64-bit integers, always in lowest terms with a
/// positive denominator. Intermediate products use 128 bits; a result that
/// does not fit back into 64 bits throws instead of wrapping.
///
/// Truth-value arithmetic only ever adds, subtracts, and compares values whose
/// denominators divide the lcm of the program constants, so 64 bits are ample.
class Fraction {
 public:
  constexpr Fraction() noexcept = default;
  constexpr Fraction(std::int64_t integer) noexcept : num_(integer) {}  // NOLINT
  Fraction(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    using W = __int128;
    return make(W(a.num_) * b.den_ + W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    using W = __int128;
    return make(W(a.num_) * b.den_ - W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    using W = __int128;
    return make(W(a.num_) * b.num_, W(a.den_) * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    using W = __int128;
    if (b.num_ == 0) throw UsageError("fraction: division by zero");
    return make(W(a.num_) * b.den_, W(a.den_) * b.num_);
  }
  Fraction operator-() const { return make(-static_cast<__int128>(num_), den_); }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    using W = __int128;
    W lhs = W(a.num_) * b.den_;
    W rhs = W(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Fraction make(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 lo = INT64_MIN;
    constexpr __int128 hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw Error("fraction: 64-bit overflow");
    Fraction f;
    f.num_ = static_cast<std::int64_t>(num);
    f.den_ = static_cast<std::int64_t>(den);
    return f;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw UsageError("fraction: zero denominator");
    *this = make(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Least common multiple, throwing on 64-bit overflow.
inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * b;
  if (l > INT64_MAX) throw Error("lcm: 64-bit overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace faspkit
