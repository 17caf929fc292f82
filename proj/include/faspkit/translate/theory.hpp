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
#include <string>
#include <utility>
#include <vector>

#include "faspkit/core/connectives.hpp"
#include "faspkit/core/truth_value.hpp"
#include "faspkit/error.hpp"
#include "faspkit/frontend/program.hpp"
#include "faspkit/semantics/interpretation.hpp"

namespace faspkit {

/// Fuzzy propositional expression over {const, var, min, max, TL, not_l,
/// not_m}.
struct Expr {
  enum class Kind { Const, Var, Min, Max, LNorm, NegL, NegG };

  Kind kind = Kind::Const;
  TruthValue value;
  AtomId atom = 0;
  std::vector<Expr> args;

  static Expr constant(TruthValue v) {
    Expr e;
    e.value = v;
    return e;
  }
  static Expr var(AtomId a) {
    Expr e;
    e.kind = Kind::Var;
    e.atom = a;
    return e;
  }
  static Expr node(Kind k, std::vector<Expr> args) {
    if (args.empty()) throw UsageError("min/max/TL need at least one argument");
    Expr e;
    e.kind = k;
    e.args = std::move(args);
    return e;
  }
  static Expr neg(Kind k, Expr arg) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(arg));
    return e;
  }
  /// max over a possibly empty list: max of nothing is 0, and max(x) is x.
  static Expr max_of(std::vector<Expr> args) {
    if (args.empty()) return constant(TruthValue::zero());
    if (args.size() == 1) return std::move(args.front());
    return node(Kind::Max, std::move(args));
  }

  friend bool operator==(const Expr&, const Expr&) = default;
};

inline TruthValue eval(const Expr& e, const Interpretation& I) {
  switch (e.kind) {
    case Expr::Kind::Const:
      return e.value;
    case Expr::Kind::Var:
      return I[e.atom];
    case Expr::Kind::NegL:
      return negator_apply(NegatorKind::Lukasiewicz, eval(e.args.front(), I));
    case Expr::Kind::NegG:
      return negator_apply(NegatorKind::Goedel, eval(e.args.front(), I));
    case Expr::Kind::Max: {
      TruthValue v = TruthValue::zero();
      for (const auto& a : e.args) v = tv_max(v, eval(a, I));
      return v;
    }
    case Expr::Kind::Min:
    case Expr::Kind::LNorm: {
      std::vector<TruthValue> vals;
      vals.reserve(e.args.size());
      for (const auto& a : e.args) vals.push_back(eval(a, I));
      return tnorm_apply(e.kind == Expr::Kind::Min ? TNormKind::Minimum : TNormKind::Lukasiewicz,
                         vals);
    }
  }
  throw InternalError("eval: bad expression kind");
}

inline bool contains(const Expr& e, Expr::Kind k) {
  if (e.kind == k) return true;
  for (const auto& a : e.args) {
    if (contains(a, k)) return true;
  }
  return false;
}

/// Eq(atom, rhs) or Leq(lhs, rhs). Satisfied under I by exact = and <=.
struct Constraint {
  enum class Kind { Eq, Leq };

  Kind kind = Kind::Leq;
  Expr lhs;
  Expr rhs;

  static Constraint eq(AtomId a, Expr rhs) { return {Kind::Eq, Expr::var(a), std::move(rhs)}; }
  static Constraint leq(Expr lhs, Expr rhs) { return {Kind::Leq, std::move(lhs), std::move(rhs)}; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A list of constraints over the atoms named by `names` (a program's base).
struct Theory {
  std::vector<std::string> names;
  std::vector<Constraint> constraints;
};

inline bool satisfies(const Interpretation& I, const Constraint& c) {
  TruthValue l = eval(c.lhs, I), r = eval(c.rhs, I);
  return c.kind == Constraint::Kind::Eq ? l == r : l <= r;
}

inline bool satisfies(const Interpretation& I, const Theory& th) {
  if (I.size() != th.names.size()) throw UsageError("satisfies: interpretation and theory differ in atoms");
  for (const auto& c : th.constraints) {
    if (!satisfies(I, c)) return false;
  }
  return true;
}

/// Expression text in the input grammar's style: TL(a, b), TM(...), max(...),
/// not_l a.
inline std::string print_expr(const std::vector<std::string>& names, const Expr& e) {
  auto list = [&](const char* op) {
    std::string out = op;
    out += "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i) out += ", ";
      out += print_expr(names, e.args[i]);
    }
    return out + ")";
  };
  auto negation = [&](const char* op) {
    const Expr& a = e.args.front();
    if (a.kind == Expr::Kind::Var || a.kind == Expr::Kind::Const) {
      return std::string(op) + " " + print_expr(names, a);
    }
    return std::string(op) + "(" + print_expr(names, a) + ")";
  };
  switch (e.kind) {
    case Expr::Kind::Const:
      return e.value.to_string();
    case Expr::Kind::Var:
      return names.at(e.atom);
    case Expr::Kind::Min:
      return list("TM");
    case Expr::Kind::Max:
      return list("max");
    case Expr::Kind::LNorm:
      return list("TL");
    case Expr::Kind::NegL:
      return negation("not_l");
    case Expr::Kind::NegG:
      return negation("not_m");
  }
  throw InternalError("print_expr: bad expression kind");
}

inline std::string print_constraint(const std::vector<std::string>& names, const Constraint& c) {
  const char* rel = c.kind == Constraint::Kind::Eq ? " = " : " <= ";
  return print_expr(names, c.lhs) + rel + print_expr(names, c.rhs);
}

inline std::string print_theory(const Theory& th) {
  std::string out;
  for (const auto& c : th.constraints) out += print_constraint(th.names, c) + "\n";
  return out;
}

}  // namespace faspkit
