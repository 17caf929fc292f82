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
#include <set>
#include <string>
#include <vector>

#include "faspkit/error.hpp"
#include "faspkit/frontend/ast.hpp"
#include "faspkit/frontend/program.hpp"

namespace faspkit {

/// Rewrites `a <-[w] T(b1..bn)` to `a <- T(b1..bn, w)`. A bare-literal body
/// becomes TM(b, w). Rules without a weight are returned unchanged.
inline SchematicRule desugar_weighted(SchematicRule rule) {
  if (!rule.weight) return rule;
  const Fraction w = *rule.weight;
  if (w < Fraction(0) || w > Fraction(1)) {
    throw UsageError("rule weight " + w.to_string() + " is outside [0,1]");
  }
  auto weight_leaf = BodyExpr::make_constant(TruthValue(w));
  if (rule.body.kind == BodyExpr::Kind::Node) {
    rule.body.children.push_back(std::move(weight_leaf));
  } else {
    rule.body = BodyExpr::make_node(Connective::TM, {std::move(rule.body), std::move(weight_leaf)});
  }
  rule.weight.reset();
  return rule;
}

/// Hands out fresh auxiliary atom names "__aux0", "__aux1", ..., skipping
/// names the source program already uses.
class AuxNamer {
 public:
  AuxNamer() = default;
  explicit AuxNamer(std::set<std::string> taken) : taken_(std::move(taken)) {}

  std::string next() {
    for (;;) {
      std::string name = std::string(kAuxPrefix) + std::to_string(counter_++);
      if (!taken_.contains(name)) return name;
    }
  }

 private:
  std::size_t counter_ = 0;
  std::set<std::string> taken_;
};

namespace detail {

inline void flatten_into(const BodyExpr& node, Connective op, std::vector<BodyExpr>& out,
                         std::vector<SchematicRule>& extra, AuxNamer& namer) {
  for (const auto& child : node.children) {
    if (child.is_leaf()) {
      out.push_back(child);
      continue;
    }
    if (!is_tnorm(child.op)) throw FragmentError(diag::kConormUnsupported);
    if (child.op == op) {
      // Same t-norm: associativity lets us splice without a new atom.
      flatten_into(child, op, out, extra, namer);
      continue;
    }
    SchematicAtom aux{namer.next(), {}};
    SchematicRule def;
    def.head = aux;
    def.pos = child.pos;
    std::vector<BodyExpr> grand;
    std::vector<SchematicRule> nested;
    flatten_into(child, child.op, grand, nested, namer);
    def.body = BodyExpr::make_node(child.op, std::move(grand));
    extra.push_back(std::move(def));
    for (auto& n : nested) extra.push_back(std::move(n));
    out.push_back(BodyExpr::make_atom(std::move(aux)));
  }
}

}  // namespace detail

/// Splits a rule with a nested body into single-t-norm rules. Inner
/// subexpressions with a different t-norm get a fresh `__aux` atom and a
/// defining rule; same-t-norm nesting is flattened. The rewritten original
/// rule comes first. Throws FragmentError on t-conorm nodes.
inline std::vector<SchematicRule> normalize_mixed(const SchematicRule& rule, AuxNamer& namer) {
  if (rule.body.is_leaf()) return {rule};
  if (!is_tnorm(rule.body.op)) throw FragmentError(diag::kConormUnsupported);
  if (rule.body.is_flat()) return {rule};
  std::vector<SchematicRule> out(1, rule);
  std::vector<BodyExpr> children;
  std::vector<SchematicRule> extra;
  detail::flatten_into(rule.body, rule.body.op, children, extra, namer);
  out.front().body = BodyExpr::make_node(rule.body.op, std::move(children));
  out.front().body.pos = rule.body.pos;
  for (auto& e : extra) out.push_back(std::move(e));
  return out;
}

}  // namespace faspkit
