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
#include <span>
#include <vector>

#include "faspkit/error.hpp"
#include "faspkit/frontend/program.hpp"
#include "faspkit/graph/depgraph.hpp"
#include "faspkit/semantics/oracle.hpp"
#include "faspkit/translate/theory.hpp"

namespace faspkit {

inline Expr literal_expr(const ExtendedLiteral& lit) {
  if (const auto* p = std::get_if<PositiveLiteral>(&lit)) return Expr::var(p->atom);
  if (const auto* c = std::get_if<ConstantLiteral>(&lit)) return Expr::constant(c->value);
  const auto& n = std::get<NegatedLiteral>(lit);
  auto k = n.negator == NegatorKind::Lukasiewicz ? Expr::Kind::NegL : Expr::Kind::NegG;
  return Expr::neg(k, Expr::var(n.atom));
}

/// The body of `r` as an expression; a one-literal body is the literal itself.
inline Expr body_expr(const Rule& r) {
  if (r.body.size() == 1) return literal_expr(r.body.front());
  std::vector<Expr> args;
  for (const auto& lit : r.body) args.push_back(literal_expr(lit));
  return Expr::node(r.tnorm == TNormKind::Lukasiewicz ? Expr::Kind::LNorm : Expr::Kind::Min,
                    std::move(args));
}

/// comp(P): a = max{bodies of P_a} for every atom (max of nothing is 0), in
/// atom order, then body <= c for every constraint rule, in rule order.
inline Theory completion(const Program& p) {
  Theory th{p.names(), {}};
  for (std::size_t i = 0; i < p.atom_count(); ++i) {
    auto a = static_cast<AtomId>(i);
    std::vector<Expr> bodies;
    for (std::size_t ri : p.rules_for(a)) bodies.push_back(body_expr(p.rules()[ri]));
    th.constraints.push_back(Constraint::eq(a, Expr::max_of(std::move(bodies))));
  }
  for (const auto& r : p.rules()) {
    if (r.is_constraint()) {
      th.constraints.push_back(
          Constraint::leq(body_expr(r), Expr::constant(std::get<TruthValue>(r.head))));
    }
  }
  return th;
}

/// Rules with head in L, split by whether their positive body meets L.
struct LoopRules {
  std::vector<std::size_t> loop_rules;
  std::vector<std::size_t> nonloop_rules;
};

inline LoopRules partition_loop_rules(const Program& p, std::span<const AtomId> L) {
  if (!is_loop(build_depgraph(p), L)) throw UsageError("partition_loop_rules: atom set is not a loop");
  std::vector<bool> in_l(p.atom_count(), false);
  for (AtomId a : L) in_l[a] = true;
  LoopRules out;
  for (std::size_t ri = 0; ri < p.rules().size(); ++ri) {
    const Rule& r = p.rules()[ri];
    auto h = r.head_atom();
    if (!h || !in_l[*h]) continue;
    auto pos = r.positive_atoms();
    bool meets = std::any_of(pos.begin(), pos.end(), [&](AtomId b) { return in_l[b]; });
    (meets ? out.loop_rules : out.nonloop_rules).push_back(ri);
  }
  return out;
}

/// max(L) <= max{bodies of the non-loop rules of L}, the right side being 0
/// when there are none.
inline Constraint loop_formula(const Program& p, std::span<const AtomId> L) {
  auto parts = partition_loop_rules(p, L);
  std::vector<AtomId> atoms(L.begin(), L.end());
  std::sort(atoms.begin(), atoms.end());
  std::vector<Expr> lhs;
  for (AtomId a : atoms) lhs.push_back(Expr::var(a));
  std::vector<Expr> rhs;
  for (std::size_t ri : parts.nonloop_rules) rhs.push_back(body_expr(p.rules()[ri]));
  return Constraint::leq(Expr::max_of(std::move(lhs)), Expr::max_of(std::move(rhs)));
}

inline Constraint loop_formula(const Program& p, std::initializer_list<AtomId> L) {
  return loop_formula(p, std::span<const AtomId>(L.begin(), L.size()));
}

/// Brute-force models of `th` on the 1/D grid, lexicographically ordered.
inline std::vector<Interpretation> grid_models(const Theory& th, std::int64_t D,
                                               std::uint64_t limit = kDefaultGridLimit) {
  std::vector<Interpretation> out;
  for_each_grid_point(
      th.names.size(), D,
      [&](const Interpretation& I) {
        if (satisfies(I, th)) out.push_back(I);
        return true;
      },
      limit);
  return out;
}

}  // namespace faspkit
