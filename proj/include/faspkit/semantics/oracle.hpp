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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "faspkit/error.hpp"
#include "faspkit/frontend/program.hpp"
#include "faspkit/semantics/interpretation.hpp"
#include "faspkit/semantics/semantics.hpp"

namespace faspkit {

inline constexpr std::uint64_t kDefaultGridLimit = 5'000'000;

/// Calls `visit` on every interpretation of `base_size` atoms with values in
/// {0, 1/D, ..., 1}, in lexicographic order (atom 0 most significant).
/// Stops early when `visit` returns false.
inline void for_each_grid_point(std::size_t base_size, std::int64_t D,
                                const std::function<bool(const Interpretation&)>& visit,
                                std::uint64_t limit = kDefaultGridLimit) {
  if (D < 1) throw UsageError("grid denominator must be at least 1");
  __int128 count = 1;
  for (std::size_t i = 0; i < base_size; ++i) {
    count *= D + 1;
    if (count > limit) {
      throw GuardError("grid of " + std::to_string(D + 1) + "^" + std::to_string(base_size) +
                       " points exceeds the limit of " + std::to_string(limit));
    }
  }
  std::vector<std::int64_t> digits(base_size, 0);
  Interpretation I(base_size);
  for (;;) {
    if (!visit(I)) return;
    std::size_t k = base_size;
    while (k > 0) {
      --k;
      if (digits[k] < D) {
        ++digits[k];
        I[static_cast<AtomId>(k)] = TruthValue(digits[k], D);
        break;
      }
      digits[k] = 0;
      I[static_cast<AtomId>(k)] = TruthValue::zero();
      if (k == 0) return;
    }
    if (base_size == 0) return;
  }
}

/// Brute-force answer sets on the 1/D grid, lexicographically ordered.
inline std::vector<Interpretation> grid_answer_sets(const Program& p, std::int64_t D,
                                                    std::uint64_t limit = kDefaultGridLimit) {
  std::vector<Interpretation> out;
  for_each_grid_point(
      p.atom_count(), D,
      [&](const Interpretation& I) {
        if (is_model(p, I) && lfp(reduct(p, I)) == I) out.push_back(I);
        return true;
      },
      limit);
  return out;
}

}  // namespace faspkit
