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

#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "faspkit/core/fraction.hpp"
#include "faspkit/error.hpp"

namespace faspkit {

/// An exact degree of truth in [0,1].
class TruthValue {
 public:
  constexpr TruthValue() noexcept = default;

  /// Throws UsageError when the value lies outside [0,1].
  explicit TruthValue(const Fraction& f) : value_(f) {
    if (f < Fraction(0) || f > Fraction(1)) {
      throw UsageError("truth value " + f.to_string() + " is outside [0,1]");
    }
  }
  TruthValue(std::int64_t num, std::int64_t den) : TruthValue(Fraction(num, den)) {}

  static TruthValue zero() noexcept { return TruthValue(); }
  static TruthValue one() { return TruthValue(Fraction(1)); }

  /// Clamps an arbitrary rational into [0,1].
  static TruthValue clamp(const Fraction& f) {
    if (f < Fraction(0)) return zero();
    if (f > Fraction(1)) return one();
    return TruthValue(f);
  }

  const Fraction& fraction() const noexcept { return value_; }
  std::int64_t numerator() const noexcept { return value_.num(); }
  std::int64_t denominator() const noexcept { return value_.den(); }
  bool is_zero() const noexcept { return value_.num() == 0; }
  bool is_one() const noexcept { return value_.num() == 1 && value_.den() == 1; }

  friend bool operator==(const TruthValue&, const TruthValue&) = default;
  friend std::strong_ordering operator<=>(const TruthValue& a, const TruthValue& b) {
    return a.value_ <=> b.value_;
  }

  /// Parses "0.8", "1", ".25", or "p/q". Returns nullopt on malformed text;
  /// throws UsageError on well-formed text outside [0,1].
  static std::optional<TruthValue> parse(std::string_view text);

  /// Shortest exact decimal when the denominator is 2^a*5^b, else "p/q".
  std::string to_string() const;

 private:
  Fraction value_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!all_digits(s) || s.size() > 18) return std::nullopt;
  std::int64_t v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace detail

inline std::optional<TruthValue> TruthValue::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = detail::parse_int(text.substr(0, slash));
    auto q = detail::parse_int(text.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return TruthValue(Fraction(*p, *q));
  }
  std::string_view whole = text;
  std::string_view frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
    if (frac.empty() || !detail::all_digits(frac)) return std::nullopt;
  }
  if (whole.empty() && frac.empty()) return std::nullopt;
  std::int64_t w = 0;
  if (!whole.empty()) {
    auto parsed = detail::parse_int(whole);
    if (!parsed) return std::nullopt;
    w = *parsed;
  }
  if (frac.size() > 17) return std::nullopt;
  std::int64_t scale = 1;
  std::int64_t f = 0;
  for (char c : frac) {
    scale *= 10;
    f = f * 10 + (c - '0');
  }
  if (w > 1) throw UsageError("truth value " + std::string(text) + " is outside [0,1]");
  return TruthValue(Fraction(w * scale + f, scale));
}

inline std::string TruthValue::to_string() const {
  std::int64_t den = value_.den();
  int twos = 0;
  int fives = 0;
  std::int64_t rest = den;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return value_.to_string();
  if (den == 1) return std::to_string(value_.num());
  int digits = twos > fives ? twos : fives;
  // num * 10^digits / den == num * 2^(digits-twos) * 5^(digits-fives)
  __int128 scaled = value_.num();
  __int128 factor = 1;
  for (int i = 0; i < digits - twos; ++i) factor *= 2;
  for (int i = 0; i < digits - fives; ++i) factor *= 5;
  scaled *= factor;
  std::string body;
  for (int i = 0; i < digits; ++i) {
    body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  return std::to_string(static_cast<std::int64_t>(scaled)) + "." + body;
}

}  // namespace faspkit
