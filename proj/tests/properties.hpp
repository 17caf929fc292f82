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
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "faspkit/assat/assat.hpp"
#include "faspkit/frontend/printer.hpp"
#include "faspkit/graph/depgraph.hpp"
#include "faspkit/semantics/oracle.hpp"
#include "faspkit/semantics/semantics.hpp"
#include "faspkit/translate/completion.hpp"

// Randomized checks of the semantic characterizations, shared by the
// property tests and the acceptance binary.
namespace faspkit::testing {

struct RandomSpec {
  std::size_t max_atoms = 4;
  std::size_t max_rules = 6;
  std::int64_t max_denominator = 6;
  bool loop_free = false;       // positive body atoms precede the head
  bool allow_goedel = true;     // N_m literals
  bool allow_constraints = true;
};

struct RandomProgram {
  Program program;
  std::int64_t D = 1;
};

inline RandomProgram random_program(std::mt19937_64& rng, const RandomSpec& spec) {
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  RandomProgram out;
  out.D = static_cast<std::int64_t>(pick(1, static_cast<std::uint64_t>(spec.max_denominator)));
  const std::size_t atoms = pick(1, spec.max_atoms);
  for (std::size_t i = 0; i < atoms; ++i) out.program.intern("a" + std::to_string(i));
  auto grid_value = [&] { return TruthValue(static_cast<std::int64_t>(pick(0, out.D)), out.D); };

  const std::size_t rules = pick(1, spec.max_rules);
  for (std::size_t r = 0; r < rules; ++r) {
    Rule rule;
    const bool constraint = spec.allow_constraints && pick(0, 9) == 0;
    const auto head = static_cast<AtomId>(pick(0, atoms - 1));
    if (constraint) {
      rule.head = grid_value();
    } else {
      rule.head = head;
    }
    rule.tnorm = pick(0, 1) ? TNormKind::Lukasiewicz : TNormKind::Minimum;
    const std::size_t len = pick(1, 3);
    for (std::size_t k = 0; k < len; ++k) {
      const auto kind = pick(0, 9);
      const auto a = static_cast<AtomId>(pick(0, atoms - 1));
      if (kind < 5) {
        if (spec.loop_free && !constraint) {
          if (head == 0) {
            rule.body.push_back(ConstantLiteral{grid_value()});
          } else {
            rule.body.push_back(PositiveLiteral{static_cast<AtomId>(pick(0, head - 1))});
          }
        } else {
          rule.body.push_back(PositiveLiteral{a});
        }
      } else if (kind < 8) {
        const bool goedel = spec.allow_goedel && pick(0, 1);
        rule.body.push_back(NegatedLiteral{goedel ? NegatorKind::Goedel : NegatorKind::Lukasiewicz, a});
      } else {
        rule.body.push_back(ConstantLiteral{grid_value()});
      }
    }
    out.program.add_rule(std::move(rule));
  }
  return out;
}

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t points = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const Program& p, const std::string& what) {
    if (failures++ == 0) first_failure = what + "\n" + print_program(p);
  }
};

inline std::vector<AtomId> whole_base(const Program& p) {
  std::vector<AtomId> out(p.atom_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<AtomId>(i);
  return out;
}

using ProgramCheck = std::function<void(const RandomProgram&, PropertyResult&)>;

inline PropertyResult run_property(std::size_t cases, std::uint64_t seed, const RandomSpec& spec,
                                   const ProgramCheck& check) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  for (std::size_t i = 0; i < cases; ++i) {
    RandomProgram rp = random_program(rng, spec);
    ++res.cases;
    check(rp, res);
  }
  return res;
}

// is_answer_set <=> model and unfounded-free, at every grid point.
inline PropertyResult prop_answer_set_characterization(std::size_t cases, std::uint64_t seed) {
  return run_property(cases, seed, {}, [](const RandomProgram& rp, PropertyResult& res) {
    for_each_grid_point(rp.program.atom_count(), rp.D, [&](const Interpretation& I) {
      ++res.points;
      const bool lhs = is_answer_set(rp.program, I);
      const bool rhs = is_model(rp.program, I) && is_unfounded_free(rp.program, I);
      if (lhs != rhs) res.fail(rp.program, "disagreement at " + to_string(rp.program, I));
      return true;
    });
  });
}

// Every grid answer set satisfies the completion.
inline PropertyResult prop_answer_sets_model_completion(std::size_t cases, std::uint64_t seed) {
  return run_property(cases, seed, {}, [](const RandomProgram& rp, PropertyResult& res) {
    const Theory th = completion(rp.program);
    for (const auto& A : grid_answer_sets(rp.program, rp.D)) {
      ++res.points;
      if (!satisfies(A, th)) res.fail(rp.program, "answer set violates completion: " + to_string(rp.program, A));
    }
  });
}

// Loop-free programs: grid completion models = grid answer sets.
inline PropertyResult prop_loop_free_completion(std::size_t cases, std::uint64_t seed) {
  RandomSpec spec;
  spec.loop_free = true;
  return run_property(cases, seed, spec, [](const RandomProgram& rp, PropertyResult& res) {
    if (!is_loop_free(build_depgraph(rp.program))) {
      res.fail(rp.program, "generator produced a loop");
      return;
    }
    ++res.points;
    if (grid_models(completion(rp.program), rp.D) != grid_answer_sets(rp.program, rp.D)) {
      res.fail(rp.program, "completion models differ from answer sets");
    }
  });
}

inline Theory completion_with_all_loops(const Program& p) {
  Theory th = completion(p);
  for (const auto& L : all_loops(build_depgraph(p), whole_base(p))) th.constraints.push_back(loop_formula(p, L));
  return th;
}

// Grid models of completion plus every loop formula = grid answer sets.
inline PropertyResult prop_loop_formulas_exact(std::size_t cases, std::uint64_t seed) {
  return run_property(cases, seed, {}, [](const RandomProgram& rp, PropertyResult& res) {
    ++res.points;
    if (grid_models(completion_with_all_loops(rp.program), rp.D) != grid_answer_sets(rp.program, rp.D)) {
      res.fail(rp.program, "completion plus loop formulas differ from answer sets");
    }
  });
}

// A completion model that is not an answer set violates the loop formula of
// some loop inside supp(M - lfp).
inline PropertyResult prop_violated_loop_exists(std::size_t cases, std::uint64_t seed) {
  return run_property(cases, seed, {}, [](const RandomProgram& rp, PropertyResult& res) {
    const Program& p = rp.program;
    const DepGraph g = build_depgraph(p);
    for (const auto& M : grid_models(completion(p), rp.D)) {
      if (is_answer_set(p, M)) continue;
      ++res.points;
      auto S = difference(M, lfp(reduct(p, M))).support();
      bool found = false;
      for (const auto& L : all_loops(g, S)) found = found || !satisfies(M, loop_formula(p, L));
      if (!found) res.fail(p, "no violated loop for " + to_string(p, M));
    }
  });
}

// solve agrees with the grid oracle: none means none on the grid, an on-grid
// answer set is in the oracle's list, and a nonempty oracle means solve finds
// something.
inline PropertyResult prop_solve_matches_oracle(std::size_t cases, std::uint64_t seed) {
  RandomSpec spec;
  spec.allow_goedel = false;
  return run_property(cases, seed, spec, [](const RandomProgram& rp, PropertyResult& res) {
    const Program& p = rp.program;
    auto trace = solve(p);
    auto oracle = grid_answer_sets(p, rp.D);
    ++res.points;
    if (!trace.answer_set) {
      if (!oracle.empty()) res.fail(p, "solve found nothing, oracle found " + to_string(p, oracle.front()));
      return;
    }
    const Interpretation& A = *trace.answer_set;
    if (!is_answer_set(p, A)) res.fail(p, "solve returned a non-answer-set");
    bool on_grid = std::all_of(A.values().begin(), A.values().end(),
                               [&](const TruthValue& v) { return rp.D % v.denominator() == 0; });
    if (on_grid && std::find(oracle.begin(), oracle.end(), A) == oracle.end()) {
      res.fail(p, "on-grid answer set missing from oracle: " + to_string(p, A));
    }
  });
}

// Same checks with the grid backend, Goedel negation included.
inline PropertyResult prop_grid_solve_matches_oracle(std::size_t cases, std::uint64_t seed) {
  return run_property(cases, seed, {}, [](const RandomProgram& rp, PropertyResult& res) {
    const Program& p = rp.program;
    SolveOptions o;
    o.backend = Backend::Grid;
    o.grid_denominator = rp.D;
    auto trace = solve(p, o);
    auto oracle = grid_answer_sets(p, rp.D);
    ++res.points;
    if (trace.answer_set.has_value() != !oracle.empty()) {
      res.fail(p, "grid solve and oracle disagree on existence");
    } else if (trace.answer_set && std::find(oracle.begin(), oracle.end(), *trace.answer_set) == oracle.end()) {
      res.fail(p, "grid solve answer not in oracle list");
    }
  });
}

}  // namespace faspkit::testing
