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

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "faspkit/core/connectives.hpp"
#include "faspkit/core/fraction.hpp"
#include "faspkit/core/truth_value.hpp"

namespace faspkit {

/// Uppercase-initial identifiers are variables.
inline bool is_variable_name(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// `pred(arg, ...)`; a propositional atom has no arguments.
struct SchematicAtom {
  std::string predicate;
  std::vector<std::string> args;

  /// Canonical ground text, e.g. "near(t1,t2)".
  std::string text() const {
    if (args.empty()) return predicate;
    std::string out = predicate + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i];
    }
    return out + ")";
  }

  bool is_ground() const {
    for (const auto& a : args) {
      if (is_variable_name(a)) return false;
    }
    return true;
  }

  friend bool operator==(const SchematicAtom&, const SchematicAtom&) = default;
};

/// Body connectives accepted by the parser. Conorms are parsed so that the
/// normalizer can reject them with a precise diagnostic.
enum class Connective { TL, TM, SL, SM };

inline std::string_view to_string(Connective c) {
  switch (c) {
    case Connective::TL: return "TL";
    case Connective::TM: return "TM";
    case Connective::SL: return "SL";
    case Connective::SM: return "SM";
  }
  return "?";
}

inline bool is_tnorm(Connective c) { return c == Connective::TL || c == Connective::TM; }

inline TNormKind to_tnorm(Connective c) {
  return c == Connective::TL ? TNormKind::Lukasiewicz : TNormKind::Minimum;
}

/// A body expression tree: a literal leaf or a connective over sub-bodies.
struct BodyExpr {
  enum class Kind { Atom, Constant, Negated, Node };

  Kind kind = Kind::Constant;
  SchematicAtom atom;             // Atom, Negated
  TruthValue value;               // Constant
  NegatorKind negator = NegatorKind::Lukasiewicz;  // Negated
  Connective op = Connective::TM;                  // Node
  std::vector<BodyExpr> children;                  // Node
  SourcePos pos;

  static BodyExpr make_atom(SchematicAtom a) {
    BodyExpr e;
    e.kind = Kind::Atom;
    e.atom = std::move(a);
    return e;
  }
  static BodyExpr make_constant(TruthValue v) {
    BodyExpr e;
    e.kind = Kind::Constant;
    e.value = v;
    return e;
  }
  static BodyExpr make_negated(NegatorKind n, SchematicAtom a) {
    BodyExpr e;
    e.kind = Kind::Negated;
    e.negator = n;
    e.atom = std::move(a);
    return e;
  }
  static BodyExpr make_node(Connective op, std::vector<BodyExpr> children) {
    BodyExpr e;
    e.kind = Kind::Node;
    e.op = op;
    e.children = std::move(children);
    return e;
  }

  bool is_leaf() const { return kind != Kind::Node; }

  /// A leaf, or a single node whose children are all leaves.
  bool is_flat() const {
    if (is_leaf()) return true;
    for (const auto& c : children) {
      if (!c.is_leaf()) return false;
    }
    return true;
  }

  friend bool operator==(const BodyExpr& a, const BodyExpr& b) {
    return a.kind == b.kind && a.atom == b.atom && a.value == b.value &&
           a.negator == b.negator && a.op == b.op && a.children == b.children;
  }
};

using SchematicHead = std::variant<SchematicAtom, TruthValue>;

/// Guard `X != Y`; either side may also be an object constant after grounding.
struct Guard {
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Guard&, const Guard&) = default;
};

struct SchematicRule {
  std::string label;
  SchematicHead head;
  /// Weight of `head <-[w] body`; kept unchecked so that desugaring can report
  /// out-of-range values.
  std::optional<Fraction> weight;
  BodyExpr body;
  std::vector<Guard> guards;
  SourcePos pos;

  friend bool operator==(const SchematicRule& a, const SchematicRule& b) {
    return a.label == b.label && a.head == b.head && a.weight == b.weight && a.body == b.body &&
           a.guards == b.guards;
  }
};

struct DomainDecl {
  std::string name;
  std::vector<std::string> constants;
};

struct SchematicProgram {
  std::vector<DomainDecl> domains;
  std::vector<SchematicRule> rules;
};

}  // namespace faspkit
