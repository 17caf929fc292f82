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
#include <string>

#include "faspkit/frontend/grounder.hpp"
#include "faspkit/frontend/normalize.hpp"
#include "faspkit/frontend/parser.hpp"
#include "faspkit/frontend/printer.hpp"
#include "faspkit/semantics/semantics.hpp"
#include "test_util.hpp"

namespace faspkit {
namespace {

using testing::tv;

TEST(Parse, FactRule) {
  auto sp = parse("r2: b <- 0.8.");
  ASSERT_EQ(sp.rules.size(), 1u);
  const auto& r = sp.rules[0];
  EXPECT_EQ(r.label, "r2");
  EXPECT_EQ(std::get<SchematicAtom>(r.head).text(), "b");
  ASSERT_EQ(r.body.kind, BodyExpr::Kind::Constant);
  EXPECT_EQ(r.body.value, TruthValue(4, 5));
}

TEST(Parse, ConstraintWithLukasiewiczBody) {
  auto sp = parse("r4: 0 <- TL(a, b).");
  const auto& r = sp.rules.at(0);
  EXPECT_EQ(std::get<TruthValue>(r.head), TruthValue::zero());
  EXPECT_EQ(r.body.op, Connective::TL);
  EXPECT_EQ(r.body.children.size(), 2u);
}

TEST(Parse, EmptyBodyIsSyntaxError) {
  try {
    parse("x <- .");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse("a <- b.\nc <- TM(b,\n  ).");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse("a <- 1.5."), ParseError);
  EXPECT_THROW(parse("a <- b"), ParseError);
  EXPECT_THROW(parse("a <- TM()."), ParseError);
  EXPECT_THROW(parse("a <- b. @"), ParseError);
}

TEST(Parse, ProductIsFragmentError) {
  EXPECT_THROW(parse("a <- TP(b, c)."), FragmentError);
  EXPECT_THROW(parse("a <- not_p b."), FragmentError);
}

TEST(Parse, CommentsDomainsGuardsAndPrimes) {
  auto sp = parse(
      "% towns\n#domain T = {t1, t2}.\n"
      "g: locNear'(A,T1) <- TL(loc(A,T1,T2), not_l near(T1,T2)), T1 != T2. % trailing\n");
  ASSERT_EQ(sp.domains.size(), 1u);
  EXPECT_EQ(sp.domains[0].constants, (std::vector<std::string>{"t1", "t2"}));
  const auto& r = sp.rules.at(0);
  EXPECT_EQ(std::get<SchematicAtom>(r.head).predicate, "locNear'");
  ASSERT_EQ(r.guards.size(), 1u);
  EXPECT_EQ(r.guards[0].lhs, "T1");
  EXPECT_EQ(r.body.children[1].kind, BodyExpr::Kind::Negated);
}

TEST(Parse, RationalConstantsAndWeights) {
  auto sp = parse("a <-[1/3] TM(b, 2/3).");
  EXPECT_EQ(*sp.rules[0].weight, Fraction(1, 3));
  EXPECT_EQ(sp.rules[0].body.children[1].value, TruthValue(2, 3));
}

TEST(Desugar, AppendsWeightToBody) {
  auto r = desugar_weighted(parse("a <-[0.7] TL(b).").rules[0]);
  EXPECT_FALSE(r.weight);
  EXPECT_EQ(r.body, parse("a <- TL(b, 0.7).").rules[0].body);
}

TEST(Desugar, WeightOneAppendsNeutralConstant) {
  auto r = desugar_weighted(parse("a <-[1] TM(b, c).").rules[0]);
  ASSERT_EQ(r.body.children.size(), 3u);
  EXPECT_EQ(r.body.children[2].value, TruthValue::one());
  Program p = load_program("a <-[1] TM(b, c).\nb <- 0.4.\nc <- 0.6.");
  Program q = load_program("a <- TM(b, c).\nb <- 0.4.\nc <- 0.6.");
  EXPECT_EQ(lfp(p).values(), lfp(q).values());
}

TEST(Desugar, WeightOutsideUnitIntervalIsRejected) {
  EXPECT_THROW(desugar_weighted(parse("a <-[1.2] TL(b).").rules[0]), UsageError);
}

TEST(Desugar, BareBodyBecomesMinimumWithWeight) {
  auto r = desugar_weighted(parse("a <-[0.5] b.").rules[0]);
  EXPECT_EQ(r.body, parse("a <- TM(b, 0.5).").rules[0].body);
}

TEST(Normalize, MixedBodyGetsAuxiliaryAtom) {
  AuxNamer namer;
  auto out = normalize_mixed(parse("a <- TL(a, TM(b, c)).").rules[0], namer);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], parse("a <- TL(a, __aux0).").rules[0]);
  EXPECT_EQ(out[1], parse("__aux0 <- TM(b, c).").rules[0]);
}

TEST(Normalize, FlatRuleUnchanged) {
  AuxNamer namer;
  auto r = parse("a <- TL(b, not_l c, 0.5).").rules[0];
  auto out = normalize_mixed(r, namer);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], r);
}

TEST(Normalize, SameTNormNestingIsFlattened) {
  AuxNamer namer;
  auto out = normalize_mixed(parse("a <- TL(b, TL(c, d)).").rules[0], namer);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].body, parse("a <- TL(b, c, d).").rules[0].body);
}

TEST(Normalize, DeepNestingStaysWithinNodeBound) {
  AuxNamer namer;
  auto out = normalize_mixed(parse("a <- TL(b, TM(c, TL(d, TM(e, f))), TM(g, h)).").rules[0], namer);
  // Four inner t-norm nodes; at most four new rules.
  EXPECT_LE(out.size() - 1, 4u);
  for (const auto& r : out) EXPECT_TRUE(r.body.is_flat());
}

TEST(Normalize, ConormIsRejected) {
  AuxNamer namer;
  EXPECT_THROW(normalize_mixed(parse("a <- SL(x, y).").rules[0], namer), FragmentError);
  EXPECT_THROW(normalize_mixed(parse("a <- TM(b, SM(x, y)).").rules[0], namer), FragmentError);
  try {
    normalize_mixed(parse("b <- SL(b, b).").rules[0], namer);
  } catch (const FragmentError& e) {
    EXPECT_NE(std::string(e.what()).find("not closed"), std::string::npos);
  }
}

TEST(Normalize, AuxNamesAvoidExistingAtoms) {
  Program p = load_program("__aux0 <- 0.5.\na <- TL(b, TM(c, __aux0)).");
  EXPECT_TRUE(p.find("__aux1"));
  EXPECT_EQ(p.rules().size(), 3u);
}

TEST(Ground, LocrOverOneAtmTwoTowns) {
  Program p = load_program("#domain A = {a1}.\n#domain T = {t1, t2}.\nlocr: loc(A,T1,T2) <- loc(A,T2,T1).");
  ASSERT_EQ(p.rules().size(), 4u);
  EXPECT_EQ(print_rule(p, p.rules()[1]), "locr_a1_t1_t2: loc(a1,t1,t2) <- loc(a1,t2,t1).");
}

TEST(Ground, UnsatisfiableGuardGivesNoInstances) {
  Program p = load_program("#domain T = {t1}.\nr: e(T1,T2) <- c(T1,T2), T1 != T2.");
  EXPECT_TRUE(p.rules().empty());
}

TEST(Ground, GroundInputIsUnchanged) {
  const std::string src =
      "r1: a <- TM(b, c).\nr2: b <- 0.8.\nr3: c <- TM(a, not_l b).\nr4: 0 <- TL(a, b).\n";
  Program p = load_program(src);
  EXPECT_EQ(print_program(p), src);
}

TEST(Ground, UncoveredVariableAndEmptyDomainAreErrors) {
  EXPECT_THROW(load_program("p(X) <- q(X)."), UsageError);
  EXPECT_THROW(load_program("#domain X = {}.\np(X) <- q(X)."), UsageError);
  EXPECT_THROW(load_program("#domain X = {a}.\n#domain X = {b}.\np <- q."), UsageError);
}

TEST(Ground, AtomsAreExactlyThoseOfTheInstances) {
  Program p = load_program("#domain X = {u, v}.\nr: p(X) <- TL(q(X), not_m s(X)).");
  std::set<std::string> names(p.names().begin(), p.names().end());
  EXPECT_EQ(names, (std::set<std::string>{"p(u)", "q(u)", "s(u)", "p(v)", "q(v)", "s(v)"}));
}

TEST(Ground, ByteIdenticalDuplicatesAreDropped) {
  Program p = load_program("a <- b.\na <- b.\na <- TM(b).");
  EXPECT_EQ(p.rules().size(), 1u);
}

TEST(Printer, RoundTripsFixtures) {
  for (const char* f : {"prog1.fasp", "progmin.fasp", "progchange.fasp", "atm_ground.fasp", "weighted.fasp"}) {
    Program p = testing::fixture(f);
    std::string once = print_program(p);
    Program q = load_program(once);
    EXPECT_EQ(print_program(q), once) << f;
    EXPECT_EQ(q.rules(), p.rules()) << f;
  }
}

}  // namespace
}  // namespace faspkit
