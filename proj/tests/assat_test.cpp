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

#include <gtest/gtest.h>

#include <algorithm>

#include "faspkit/assat/assat.hpp"
#include "faspkit/semantics/oracle.hpp"
#include "test_util.hpp"

namespace faspkit {
namespace {

using testing::atom;
using testing::fixture;
using testing::interp;
using testing::read_fixture;

void expect_trace_invariants(const Program& p, const SolveTrace& t) {
  for (const auto& it : t.iterations) {
    for (const auto& L : it.loops_added) {
      for (AtomId a : L) {
        EXPECT_TRUE(std::binary_search(it.support.begin(), it.support.end(), a));
      }
      EXPECT_FALSE(satisfies(it.candidate, loop_formula(p, L)));
    }
  }
  if (t.answer_set) {
    EXPECT_TRUE(is_answer_set(p, *t.answer_set));
  }
}

TEST(Solve, Progchange) {
  Program p = fixture("progchange.fasp");
  auto t = solve(p);
  ASSERT_TRUE(t.answer_set);
  EXPECT_EQ(*t.answer_set, interp(p, {{"a", "0.3"}, {"b", "0.3"}}));
  EXPECT_LE(t.iterations.size(), 2u);
  expect_trace_invariants(p, t);
}

TEST(Solve, Prog1) {
  Program p = fixture("prog1.fasp");
  auto t = solve(p);
  ASSERT_TRUE(t.answer_set);
  EXPECT_EQ(*t.answer_set, interp(p, {{"b", "0.8"}}));
  expect_trace_invariants(p, t);
  // When the solver proposes I2 first, the loop {a, c} is what rules it out.
  if (t.iterations.size() > 1) {
    EXPECT_EQ(t.iterations[0].loops_added, (std::vector<Loop>{{atom(p, "a"), atom(p, "c")}}));
  }
}

TEST(Solve, Progmin) {
  Program p = fixture("progmin.fasp");
  auto t = solve(p);
  ASSERT_TRUE(t.answer_set);
  EXPECT_EQ(*t.answer_set, interp(p, {{"p", "0.5"}}));
  expect_trace_invariants(p, t);
}

TEST(Solve, ConstraintUnsat) {
  Program p = fixture("constraint_unsat.fasp");
  auto t = solve(p);
  EXPECT_FALSE(t.answer_set);
  EXPECT_TRUE(grid_answer_sets(p, 2).empty());
}

TEST(Solve, MaximalModeAgrees) {
  for (const char* f : {"prog1.fasp", "progchange.fasp", "progmin.fasp", "weighted.fasp"}) {
    Program p = fixture(f);
    SolveOptions o;
    o.loop_mode = LoopMode::Maximal;
    auto t = solve(p, o);
    ASSERT_TRUE(t.answer_set) << f;
    expect_trace_invariants(p, t);
    EXPECT_EQ(*t.answer_set, *solve(p).answer_set) << f;
  }
}

TEST(Solve, GridBackendHandlesGoedelNegation) {
  Program p = fixture("goedel_choice.fasp");
  EXPECT_THROW(solve(p), FragmentError);
  SolveOptions o;
  o.backend = Backend::Grid;
  o.grid_denominator = 4;
  auto t = solve(p, o);
  ASSERT_TRUE(t.answer_set);
  auto sets = grid_answer_sets(p, 4);
  EXPECT_NE(std::find(sets.begin(), sets.end(), *t.answer_set), sets.end());
}

TEST(Solve, WeightedRule) {
  Program p = fixture("weighted.fasp");
  auto t = solve(p);
  ASSERT_TRUE(t.answer_set);
  EXPECT_EQ((*t.answer_set)[atom(p, "both")], testing::tv("0.6"));
  EXPECT_EQ((*t.answer_set)[atom(p, "reach(t1,t2)")], testing::tv("0.9"));
}

TEST(Solve, ConormProgramsRejectedAtLoad) {
  for (const char* f : {"conorm_negation.fasp", "conorm_loop.fasp", "conorm_nested.fasp"}) {
    EXPECT_THROW(fixture(f), FragmentError) << f;
  }
}

TEST(Check, Prog1) {
  Program p = fixture("prog1.fasp");
  auto r1 = check(p, interp(p, {{"b", "0.8"}}));
  EXPECT_TRUE(r1.answer_set);
  EXPECT_TRUE(r1.support.empty());
  auto r2 = check(p, interp(p, {{"a", "0.2"}, {"b", "0.8"}, {"c", "0.2"}}));
  EXPECT_TRUE(r2.model);
  EXPECT_TRUE(r2.model_of_completion);
  EXPECT_FALSE(r2.answer_set);
  ASSERT_EQ(r2.loops.size(), 1u);
  EXPECT_TRUE(r2.loops[0].violated);
}

class Atm : public ::testing::Test {
 protected:
  Program p = fixture("atm_ground.fasp");
  Interpretation model(const char* f) { return interpretation_from_json(p, read_fixture(f)); }
};

TEST_F(Atm, CorrectedFirstModelIsCompletionModelButNotAnswerSet) {
  auto r = check(p, model("atm_m1_corrected.json"));
  EXPECT_TRUE(r.model_of_completion);
  EXPECT_FALSE(r.answer_set);
  EXPECT_EQ(r.lfp[atom(p, "near(t1,t2)")], testing::tv("0.8"));
  EXPECT_TRUE(std::binary_search(r.support.begin(), r.support.end(), atom(p, "near(t1,t2)")));
  EXPECT_TRUE(std::binary_search(r.support.begin(), r.support.end(), atom(p, "near(t2,t1)")));
  std::size_t violated = 0;
  for (const auto& l : r.loops) violated += l.violated;
  EXPECT_GE(violated, 2u);
}

TEST_F(Atm, CorrectedSecondModelIsAnswerSet) {
  EXPECT_TRUE(is_answer_set(p, model("atm_m2_corrected.json")));
}

TEST_F(Atm, ListedModelsAsPrinted) {
  auto r = check(p, model("atm_m1_listed.json"));
  EXPECT_FALSE(r.model_of_completion);
  EXPECT_EQ(r.lfp[atom(p, "near(t1,t2)")], testing::tv("0.8"));
  EXPECT_FALSE(is_answer_set(p, model("atm_m2_listed.json")));
}

TEST(Json, TraceAndReportShape) {
  Program p = fixture("progchange.fasp");
  auto j = to_json(p, solve(p));
  EXPECT_EQ(j["answer_set"], nlohmann::json::parse(R"({"a":"0.3","b":"0.3"})"));
  ASSERT_TRUE(j["iterations"].is_array());
  auto r = to_json(p, check(p, interp(p, {{"a", "1"}, {"b", "1"}})));
  for (const char* k : {"model", "model_of_completion", "answer_set", "lfp", "support", "loops"}) {
    EXPECT_TRUE(r.contains(k)) << k;
  }
  EXPECT_EQ(r["loops"][0]["formula"], "max(a, b) <= 0.3");
  EXPECT_EQ(r["loops"][0]["violated"], true);
}

}  // namespace
}  // namespace faspkit
