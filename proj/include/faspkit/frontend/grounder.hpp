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
#include <cctype>
#include <set>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "faspkit/error.hpp"
#include "faspkit/frontend/ast.hpp"
#include "faspkit/frontend/normalize.hpp"
#include "faspkit/frontend/parser.hpp"
#include "faspkit/frontend/program.hpp"

namespace faspkit {

namespace detail {

using Binding = std::map<std::string, std::string, std::less<>>;

inline void collect_vars(const SchematicAtom& a, std::vector<std::string>& vars) {
  for (const auto& arg : a.args) {
    if (is_variable_name(arg) && std::find(vars.begin(), vars.end(), arg) == vars.end()) {
      vars.push_back(arg);
    }
  }
}

inline void collect_vars(const BodyExpr& e, std::vector<std::string>& vars) {
  if (e.kind == BodyExpr::Kind::Node) {
    for (const auto& c : e.children) collect_vars(c, vars);
  } else if (e.kind != BodyExpr::Kind::Constant) {
    collect_vars(e.atom, vars);
  }
}

inline void collect_aux(const SchematicAtom& a, std::set<std::string>& out) {
  if (is_aux_atom(a.predicate)) out.insert(a.text());
}

inline void collect_aux(const BodyExpr& e, std::set<std::string>& out) {
  if (e.kind == BodyExpr::Kind::Node) {
    for (const auto& c : e.children) collect_aux(c, out);
  } else if (e.kind != BodyExpr::Kind::Constant) {
    collect_aux(e.atom, out);
  }
}

inline std::vector<std::string> rule_variables(const SchematicRule& r) {
  std::vector<std::string> vars;
  if (const auto* h = std::get_if<SchematicAtom>(&r.head)) collect_vars(*h, vars);
  collect_vars(r.body, vars);
  for (const auto& g : r.guards) {
    for (const auto* side : {&g.lhs, &g.rhs}) {
      if (is_variable_name(*side) && std::find(vars.begin(), vars.end(), *side) == vars.end()) {
        vars.push_back(*side);
      }
    }
  }
  return vars;
}

/// X, X1, X2, X' all draw from `#domain X`.
inline std::string variable_stem(std::string_view var) {
  std::size_t end = var.size();
  while (end > 1 && (std::isdigit(static_cast<unsigned char>(var[end - 1])) || var[end - 1] == '\'')) {
    --end;
  }
  return std::string(var.substr(0, end));
}

inline std::string subst(const std::string& term, const Binding& b) {
  if (auto it = b.find(term); it != b.end()) return it->second;
  return term;
}

inline SchematicAtom subst(const SchematicAtom& a, const Binding& b) {
  SchematicAtom out{a.predicate, {}};
  for (const auto& arg : a.args) out.args.push_back(subst(arg, b));
  return out;
}

inline BodyExpr subst(const BodyExpr& e, const Binding& b) {
  BodyExpr out = e;
  if (e.kind == BodyExpr::Kind::Node) {
    for (auto& c : out.children) c = subst(c, b);
  } else if (e.kind != BodyExpr::Kind::Constant) {
    out.atom = subst(e.atom, b);
  }
  return out;
}

inline ExtendedLiteral lower_literal(const BodyExpr& e, Program& p) {
  switch (e.kind) {
    case BodyExpr::Kind::Atom: return PositiveLiteral{p.intern(e.atom.text())};
    case BodyExpr::Kind::Constant: return ConstantLiteral{e.value};
    case BodyExpr::Kind::Negated: return NegatedLiteral{e.negator, p.intern(e.atom.text())};
    case BodyExpr::Kind::Node: break;
  }
  throw InternalError("lower_literal: body is not flat");
}

/// Flat ground schematic rule -> program rule.
inline Rule lower(const SchematicRule& r, Program& p) {
  Rule out;
  out.label = r.label;
  if (const auto* h = std::get_if<SchematicAtom>(&r.head)) {
    if (!h->is_ground()) throw InternalError("lower: head is not ground");
    out.head = p.intern(h->text());
  } else {
    out.head = std::get<TruthValue>(r.head);
  }
  if (r.body.is_leaf()) {
    out.tnorm = TNormKind::Minimum;
    out.body.push_back(lower_literal(r.body, p));
  } else {
    out.tnorm = to_tnorm(r.body.op);
    for (const auto& c : r.body.children) out.body.push_back(lower_literal(c, p));
  }
  return out;
}

}  // namespace detail

/// Instantiates every schematic rule over the declared domains, then
/// desugars weights and normalizes mixed bodies. Variables draw their values
/// from the domain named by the variable with trailing digits and primes
/// removed (T1, T2, T' all range over `#domain T`). Guards `X != Y` filter
/// instances; instance labels get the substituted constants appended
/// ("locr" -> "locr_a1_t1_t2").
inline Program ground(const SchematicProgram& sp) {
  std::map<std::string, std::vector<std::string>, std::less<>> domains;
  for (const auto& d : sp.domains) {
    if (!domains.emplace(d.name, d.constants).second) {
      throw UsageError("domain '" + d.name + "' is declared twice");
    }
  }

  std::set<std::string> taken;
  for (const auto& r : sp.rules) {
    if (const auto* h = std::get_if<SchematicAtom>(&r.head)) detail::collect_aux(*h, taken);
    detail::collect_aux(r.body, taken);
  }
  Program prog;
  AuxNamer namer(std::move(taken));
  auto emit = [&](SchematicRule r) {
    r = desugar_weighted(std::move(r));
    for (const auto& flat : normalize_mixed(r, namer)) prog.add_rule(detail::lower(flat, prog));
  };

  for (const auto& rule : sp.rules) {
    auto vars = detail::rule_variables(rule);
    std::vector<const std::vector<std::string>*> ranges;
    for (const auto& v : vars) {
      auto it = domains.find(v);
      if (it == domains.end()) it = domains.find(detail::variable_stem(v));
      if (it == domains.end()) {
        throw UsageError("variable " + v + " in rule at line " + std::to_string(rule.pos.line) +
                         " is not covered by a #domain declaration");
      }
      if (it->second.empty()) throw UsageError("domain '" + it->first + "' is empty");
      ranges.push_back(&it->second);
    }

    // Odometer over the cartesian product; the last variable varies fastest.
    std::vector<std::size_t> odo(vars.size(), 0);
    bool more = true;
    while (more) {
      detail::Binding b;
      for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = (*ranges[i])[odo[i]];
      bool ok = std::all_of(rule.guards.begin(), rule.guards.end(), [&](const Guard& g) {
        return detail::subst(g.lhs, b) != detail::subst(g.rhs, b);
      });
      if (ok) {
        SchematicRule r;
        r.label = rule.label;
        if (!r.label.empty()) {
          for (const auto& v : vars) r.label += "_" + b[v];
        }
        if (const auto* h = std::get_if<SchematicAtom>(&rule.head)) {
          r.head = detail::subst(*h, b);
        } else {
          r.head = rule.head;
        }
        r.weight = rule.weight;
        r.body = detail::subst(rule.body, b);
        r.pos = rule.pos;
        emit(std::move(r));
      }
      more = false;
      for (std::size_t k = vars.size(); k-- > 0;) {
        if (++odo[k] < ranges[k]->size()) {
          more = true;
          break;
        }
        odo[k] = 0;
      }
    }
  }
  return prog;
}

/// parse + ground.
inline Program load_program(std::string_view text) { return ground(parse(text)); }

}  // namespace faspkit
