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

#include <algorithm>
#include <cstdint>
#include <span>
#include <string_view>

#include "faspkit/core/truth_value.hpp"
#include "faspkit/error.hpp"

namespace faspkit {

/// Supported t-norms. Product is deliberately absent; see tnorm_from_name.
enum class TNormKind : std::uint8_t { Lukasiewicz, Minimum };

/// Supported negators: Lukasiewicz 1-x and the strict Goedel negator.
enum class NegatorKind : std::uint8_t { Lukasiewicz, Goedel };

inline std::string_view to_string(TNormKind k) {
  return k == TNormKind::Lukasiewicz ? "TL" : "TM";
}

inline std::string_view to_string(NegatorKind k) {
  return k == NegatorKind::Lukasiewicz ? "not_l" : "not_m";
}

/// Maps a connective spelling ("TL", "TM") to its kind. "TP" throws
/// FragmentError; anything else throws UsageError.
inline TNormKind tnorm_from_name(std::string_view name) {
  if (name == "TL") return TNormKind::Lukasiewicz;
  if (name == "TM") return TNormKind::Minimum;
  if (name == "TP") throw FragmentError(diag::kProductUnsupported);
  throw UsageError("unknown t-norm '" + std::string(name) + "'");
}

inline NegatorKind negator_from_name(std::string_view name) {
  if (name == "not_l") return NegatorKind::Lukasiewicz;
  if (name == "not_m") return NegatorKind::Goedel;
  if (name == "not_p") throw FragmentError(diag::kProductUnsupported);
  throw UsageError("unknown negator '" + std::string(name) + "'");
}

/// n-ary t-norm. Lukasiewicz uses the closed form max(0, sum - (n-1)), which
/// agrees with the left fold of the binary operator.
inline TruthValue tnorm_apply(TNormKind kind, std::span<const TruthValue> args) {
  if (args.empty()) throw UsageError("tnorm_apply: empty argument list");
  if (args.size() == 1) return args.front();
  if (kind == TNormKind::Minimum) return *std::min_element(args.begin(), args.end());
  Fraction sum(0);
  for (const auto& a : args) sum += a.fraction();
  return TruthValue::clamp(sum - Fraction(static_cast<std::int64_t>(args.size()) - 1));
}

inline TruthValue tnorm_apply(TNormKind kind, std::initializer_list<TruthValue> args) {
  return tnorm_apply(kind, std::span<const TruthValue>(args.begin(), args.size()));
}

/// Residual implicator of the t-norm: sup { l | T(x, l) <= y }.
inline TruthValue residual_implicator(TNormKind kind, const TruthValue& x, const TruthValue& y) {
  if (x <= y) return TruthValue::one();
  if (kind == TNormKind::Minimum) return y;
  return TruthValue::clamp(Fraction(1) - x.fraction() + y.fraction());
}

inline TruthValue negator_apply(NegatorKind kind, const TruthValue& x) {
  if (kind == NegatorKind::Lukasiewicz) return TruthValue(Fraction(1) - x.fraction());
  return x.is_zero() ? TruthValue::one() : TruthValue::zero();
}

/// Binary max/min on truth values, for completion formulas.
inline TruthValue tv_max(const TruthValue& a, const TruthValue& b) { return a < b ? b : a; }
inline TruthValue tv_min(const TruthValue& a, const TruthValue& b) { return b < a ? b : a; }

/// Pointwise truncated difference max(0, a - b).
inline TruthValue truncated_difference(const TruthValue& a, const TruthValue& b) {
  return TruthValue::clamp(a.fraction() - b.fraction());
}

}  // namespace faspkit
