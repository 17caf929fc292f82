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
#include <optional>
#include <string>
#include <vector>

#include "faspkit/error.hpp"
#include "faspkit/fuzzysat/milp.hpp"
#include "faspkit/fuzzysat/simplex.hpp"
#include "faspkit/semantics/interpretation.hpp"
#include "faspkit/translate/theory.hpp"

namespace faspkit {

struct MilpSolution {
  std::vector<Rational> x;
  Rational objective = 0;
};

struct BranchStats {
  std::uint64_t nodes = 0;
};

/// Depth-first branch and bound: binaries in encoding order, 0 first. Returns
/// the first integral point, or the optimum when the model has an objective.
inline std::optional<MilpSolution> milp_solve(const MilpModel& m, BranchStats* stats = nullptr,
                                              std::uint64_t node_limit = 2'000'000) {
  std::vector<Rational> lo, hi;
  for (const auto& v : m.vars) {
    lo.push_back(v.lower);
    hi.push_back(v.upper);
  }
  const auto bins = m.binaries();
  const bool optimize = m.objective.has_value();
  std::optional<MilpSolution> best;
  std::uint64_t nodes = 0;

  struct Node {
    std::vector<Rational> lo, hi;
  };
  std::vector<Node> stack{{lo, hi}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++nodes > node_limit) throw GuardError("branch and bound node limit exceeded");
    LpResult lp = lp_solve(m, node.lo, node.hi, optimize);
    if (!lp.feasible) continue;
    if (optimize && best && lp.objective >= best->objective) continue;
    std::optional<std::size_t> branch;
    for (std::size_t b : bins) {
      if (lp.x[b] != 0 && lp.x[b] != 1) {
        branch = b;
        break;
      }
    }
    if (!branch) {
      best = MilpSolution{lp.x, lp.objective};
      if (!optimize) break;
      continue;
    }
    // Push the 1-branch first so the 0-branch is explored first.
    Node one = node;
    one.lo[*branch] = 1;
    Node zero = std::move(node);
    zero.hi[*branch] = 0;
    stack.push_back(std::move(one));
    stack.push_back(std::move(zero));
  }
  if (stats) stats->nodes = nodes;
  return best;
}

struct SatResult {
  std::optional<Interpretation> model;  // nullopt means unsat
  bool sat() const { return model.has_value(); }
};

struct SatOptions {
  /// Atoms whose sum is maximized; empty means feasibility only.
  std::vector<std::size_t> maximize;
  std::uint64_t node_limit = 2'000'000;
};

/// Model of `th` over [0,1] via the MILP encoding, or unsat. A returned model
/// has been re-checked against `th` with exact arithmetic.
inline SatResult sat_solve(const Theory& th, const SatOptions& opts = {}) {
  MilpModel m = encode(th);
  if (!opts.maximize.empty()) set_maximize_atoms(m, opts.maximize);
  auto sol = milp_solve(m, nullptr, opts.node_limit);
  if (!sol) return {};
  Interpretation I(th.names.size());
  for (std::size_t i = 0; i < th.names.size(); ++i) {
    I[static_cast<AtomId>(i)] = to_truth_value(sol->x[i]);
  }
  if (!satisfies(I, th)) throw InternalError("sat_solve: MILP point does not satisfy the theory");
  return {I};
}

}  // namespace faspkit
