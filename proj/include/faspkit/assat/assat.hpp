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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "faspkit/error.hpp"
#include "faspkit/frontend/program.hpp"
#include "faspkit/fuzzysat/solver.hpp"
#include "faspkit/graph/depgraph.hpp"
#include "faspkit/semantics/json_io.hpp"
#include "faspkit/semantics/oracle.hpp"
#include "faspkit/semantics/semantics.hpp"
#include "faspkit/translate/completion.hpp"

namespace faspkit {

enum class Backend { Milp, Grid };
enum class LoopMode { All, Maximal };

struct SolveOptions {
  Backend backend = Backend::Milp;
  /// Grid backend only; 0 picks the lcm of the program's constant denominators.
  std::int64_t grid_denominator = 0;
  LoopMode loop_mode = LoopMode::All;
  std::size_t max_support = kDefaultLoopGuard;
  /// Milp backend only: atoms whose sum each SAT call maximizes.
  std::vector<std::size_t> maximize;
};

struct SolveIteration {
  Interpretation candidate;
  Interpretation lfp;
  std::vector<AtomId> support;
  std::vector<Loop> loops_added;
};

struct SolveTrace {
  std::vector<SolveIteration> iterations;
  std::optional<Interpretation> answer_set;  // nullopt: no answer set
};

namespace detail {

inline std::optional<Interpretation> grid_sat(const Theory& th, std::int64_t D) {
  std::optional<Interpretation> found;
  for_each_grid_point(th.names.size(), D, [&](const Interpretation& I) {
    if (!satisfies(I, th)) return true;
    found = I;
    return false;
  });
  return found;
}

}  // namespace detail

/// Completion plus loop formulas, re-solved until the candidate equals the
/// least fixpoint of its reduct. Each round adds the loop formulas, among the
/// loops inside supp(M - lfp), that the candidate violates.
inline SolveTrace solve(const Program& p, const SolveOptions& opts = {}) {
  const DepGraph g = build_depgraph(p);
  Theory th = completion(p);
  const std::int64_t D = opts.grid_denominator > 0 ? opts.grid_denominator : constant_lcm(p);
  std::vector<Loop> added;
  SolveTrace trace;
  for (;;) {
    std::optional<Interpretation> M;
    if (opts.backend == Backend::Milp) {
      M = sat_solve(th, SatOptions{opts.maximize}).model;
    } else {
      M = detail::grid_sat(th, D);
    }
    // Loop formulas never cut off an answer set, so unsat here is final.
    if (!M) return trace;
    SolveIteration it{*M, lfp(reduct(p, *M)), {}, {}};
    if (it.lfp == *M) {
      if (!is_answer_set(p, *M)) throw InternalError("solve: fixpoint candidate failed verification");
      trace.answer_set = *M;
      trace.iterations.push_back(std::move(it));
      return trace;
    }
    it.support = difference(*M, it.lfp).support();
    std::vector<Loop> found = opts.loop_mode == LoopMode::All
                                  ? all_loops(g, it.support, opts.max_support)
                                  : maximal_loops(g, it.support);
    auto collect = [&](const std::vector<Loop>& loops) {
      for (const auto& L : loops) {
        if (std::find(added.begin(), added.end(), L) != added.end()) continue;
        Constraint lf = loop_formula(p, L);
        if (satisfies(*M, lf)) continue;
        th.constraints.push_back(std::move(lf));
        added.push_back(L);
        it.loops_added.push_back(L);
      }
    };
    collect(found);
    if (it.loops_added.empty() && opts.loop_mode == LoopMode::Maximal) {
      collect(all_loops(g, it.support, opts.max_support));
    }
    if (it.loops_added.empty()) {
      throw InternalError("solve: no violated loop formula found inside the support");
    }
    trace.iterations.push_back(std::move(it));
  }
}

struct LoopCheck {
  Loop loop;
  Constraint formula;
  bool violated = false;
};

struct CheckReport {
  bool model = false;
  bool model_of_completion = false;
  bool answer_set = false;
  Interpretation lfp;
  std::vector<AtomId> support;
  std::vector<LoopCheck> loops;
};

/// Diagnoses one interpretation: model checks, lfp of the reduct, the
/// support of I - lfp and the loop formulas of every loop inside it.
inline CheckReport check(const Program& p, const Interpretation& I,
                         std::size_t max_support = kDefaultLoopGuard) {
  CheckReport r;
  r.model = is_model(p, I);
  r.model_of_completion = satisfies(I, completion(p));
  r.lfp = lfp(reduct(p, I));
  r.answer_set = r.model && r.lfp == I;
  r.support = difference(I, r.lfp).support();
  for (auto& L : all_loops(build_depgraph(p), r.support, max_support)) {
    Constraint lf = loop_formula(p, L);
    bool violated = !satisfies(I, lf);
    r.loops.push_back({std::move(L), std::move(lf), violated});
  }
  return r;
}

inline nlohmann::json atoms_json(const Program& p, const std::vector<AtomId>& atoms) {
  std::vector<std::string> names;
  for (AtomId a : atoms) names.push_back(p.name(a));
  std::sort(names.begin(), names.end());
  return names;
}

inline nlohmann::json to_json(const Program& p, const SolveTrace& t, bool include_aux = false) {
  nlohmann::json out = nlohmann::json::object();
  if (t.answer_set) {
    out["answer_set"] = interpretation_to_json(p, *t.answer_set, include_aux);
  } else {
    out["answer_set"] = nullptr;
  }
  nlohmann::json its = nlohmann::json::array();
  for (const auto& it : t.iterations) {
    nlohmann::json j;
    j["candidate"] = interpretation_to_json(p, it.candidate, include_aux);
    j["lfp"] = interpretation_to_json(p, it.lfp, include_aux);
    j["support"] = atoms_json(p, it.support);
    j["loops_added"] = nlohmann::json::array();
    j["loop_formulas"] = nlohmann::json::array();
    for (const auto& L : it.loops_added) {
      j["loops_added"].push_back(atoms_json(p, L));
      j["loop_formulas"].push_back(print_constraint(p.names(), loop_formula(p, L)));
    }
    its.push_back(std::move(j));
  }
  out["iterations"] = std::move(its);
  return out;
}

inline nlohmann::json to_json(const Program& p, const CheckReport& r, bool include_aux = false) {
  nlohmann::json out;
  out["model"] = r.model;
  out["model_of_completion"] = r.model_of_completion;
  out["answer_set"] = r.answer_set;
  out["lfp"] = interpretation_to_json(p, r.lfp, include_aux);
  out["support"] = atoms_json(p, r.support);
  out["loops"] = nlohmann::json::array();
  for (const auto& l : r.loops) {
    out["loops"].push_back({{"atoms", atoms_json(p, l.loop)},
                            {"formula", print_constraint(p.names(), l.formula)},
                            {"violated", l.violated}});
  }
  return out;
}

}  // namespace faspkit
