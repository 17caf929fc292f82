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

#include <set>
#include <utility>

#include "faspkit/graph/depgraph.hpp"
#include "test_util.hpp"

namespace faspkit {
namespace {

using testing::atom;
using testing::fixture;

using Edge = std::pair<std::string, std::string>;

std::set<Edge> named_edges(const Program& p, const DepGraph& g) {
  std::set<Edge> out;
  for (auto [a, b] : g.edges()) out.emplace(p.name(a), p.name(b));
  return out;
}

std::vector<std::vector<std::string>> named(const Program& p, const std::vector<Loop>& ls) {
  std::vector<std::vector<std::string>> out;
  for (const auto& l : ls) {
    std::vector<std::string> names;
    for (AtomId a : l) names.push_back(p.name(a));
    std::sort(names.begin(), names.end());
    out.push_back(names);
  }
  return out;
}

TEST(DepGraph, Prog1Edges) {
  Program p = fixture("prog1.fasp");
  EXPECT_EQ(named_edges(p, build_depgraph(p)), (std::set<Edge>{{"a", "b"}, {"a", "c"}, {"c", "a"}}));
}

TEST(DepGraph, ProgchangeEdges) {
  Program p = fixture("progchange.fasp");
  EXPECT_EQ(named_edges(p, build_depgraph(p)), (std::set<Edge>{{"a", "b"}, {"b", "a"}}));
}

TEST(DepGraph, FactsHaveNoEdges) {
  Program p = load_program("a <- 0.5.\nb <- 1.\nc <- TL(not_l a, not_m b).");
  EXPECT_TRUE(build_depgraph(p).edges().empty());
  EXPECT_TRUE(is_loop_free(build_depgraph(p)));
}

TEST(MaximalLoops, Prog1) {
  Program p = fixture("prog1.fasp");
  auto g = build_depgraph(p);
  EXPECT_EQ(named(p, maximal_loops(g, {atom(p, "a"), atom(p, "b"), atom(p, "c")})),
            (std::vector<std::vector<std::string>>{{"a", "c"}}));
}

TEST(MaximalLoops, SelfLoop) {
  Program p = fixture("progmin.fasp");
  auto g = build_depgraph(p);
  EXPECT_EQ(named(p, maximal_loops(g, {atom(p, "a"), atom(p, "p")})),
            (std::vector<std::vector<std::string>>{{"a"}}));
}

TEST(MaximalLoops, AcyclicSubgraph) {
  Program p = load_program("a <- b.\nb <- c.\nc <- 1.");
  auto g = build_depgraph(p);
  EXPECT_TRUE(maximal_loops(g, {0, 1, 2}).empty());
  EXPECT_TRUE(is_loop_free(g));
}

TEST(AllLoops, EmptyAndProgchange) {
  Program p = fixture("progchange.fasp");
  auto g = build_depgraph(p);
  EXPECT_TRUE(all_loops(g, {}).empty());
  EXPECT_EQ(named(p, all_loops(g, {atom(p, "a"), atom(p, "b")})),
            (std::vector<std::vector<std::string>>{{"a", "b"}}));
}

TEST(AllLoops, AscendingBySizeAndComplete) {
  // Triangle with chords and a self edge on x.
  Program p = load_program("x <- TM(x, y).\ny <- z.\nz <- x.\nx <- z.");
  auto g = build_depgraph(p);
  auto loops = named(p, all_loops(g, {0, 1, 2}));
  EXPECT_EQ(loops, (std::vector<std::vector<std::string>>{{"x"}, {"x", "z"}, {"x", "y", "z"}}));
}

TEST(AllLoops, AtmNearPairHasOnlySingletonLoops) {
  Program p = fixture("atm_ground.fasp");
  auto g = build_depgraph(p);
  AtomId n12 = atom(p, "near(t1,t2)"), n21 = atom(p, "near(t2,t1)");
  auto loops = all_loops(g, {n12, n21});
  EXPECT_EQ(named(p, loops),
            (std::vector<std::vector<std::string>>{{"near(t1,t2)"}, {"near(t2,t1)"}}));
  EXPECT_FALSE(is_loop(g, std::vector<AtomId>{n12, n21}));
}

TEST(AllLoops, GuardAppliesPerComponent) {
  std::string src;
  for (int i = 0; i < 20; ++i) src += "a" + std::to_string(i) + " <- a" + std::to_string(i) + ".\n";
  Program p = load_program(src);
  auto g = build_depgraph(p);
  std::vector<AtomId> all(20);
  for (AtomId i = 0; i < 20; ++i) all[i] = i;
  EXPECT_EQ(all_loops(g, all).size(), 20u);

  std::string ring;
  for (int i = 0; i < 20; ++i) ring += "b" + std::to_string(i) + " <- b" + std::to_string((i + 1) % 20) + ".\n";
  Program q = load_program(ring);
  EXPECT_THROW(all_loops(build_depgraph(q), all), GuardError);
}

TEST(Loops, MaximalLoopsAreAmongAllLoopsAndConnected) {
  Program p = fixture("atm_ground.fasp");
  auto g = build_depgraph(p);
  std::vector<AtomId> S;
  for (const char* n : {"near(t1,t2)", "near(t2,t1)", "near(t2,t3)", "near(t3,t2)", "near(t1,t3)"}) {
    S.push_back(atom(p, n));
  }
  auto all = all_loops(g, S);
  for (const auto& m : maximal_loops(g, S)) {
    EXPECT_NE(std::find(all.begin(), all.end(), m), all.end());
  }
  for (const auto& l : all) EXPECT_TRUE(is_loop(g, l));
}

}  // namespace
}  // namespace faspkit
