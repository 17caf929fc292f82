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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "faspkit/core/connectives.hpp"
#include "faspkit/core/truth_value.hpp"

namespace faspkit {

/// Index into a Program's Herbrand base.
using AtomId = std::uint32_t;

/// Prefix reserved for atoms introduced by body normalization.
inline constexpr std::string_view kAuxPrefix = "__aux";

inline bool is_aux_atom(std::string_view name) { return name.starts_with(kAuxPrefix); }

struct PositiveLiteral {
  AtomId atom;
  friend bool operator==(const PositiveLiteral&, const PositiveLiteral&) = default;
};

struct ConstantLiteral {
  TruthValue value;
  friend bool operator==(const ConstantLiteral&, const ConstantLiteral&) = default;
};

struct NegatedLiteral {
  NegatorKind negator;
  AtomId atom;
  friend bool operator==(const NegatedLiteral&, const NegatedLiteral&) = default;
};

using ExtendedLiteral = std::variant<PositiveLiteral, ConstantLiteral, NegatedLiteral>;

/// Head of a ground rule: an atom, or a constant for constraints.
using RuleHead = std::variant<AtomId, TruthValue>;

/// A ground rule `label: head <- T(b1, ..., bn)` with n >= 1.
struct Rule {
  std::string label;
  RuleHead head;
  TNormKind tnorm = TNormKind::Minimum;
  std::vector<ExtendedLiteral> body;

  bool is_constraint() const { return std::holds_alternative<TruthValue>(head); }

  std::optional<AtomId> head_atom() const {
    if (const auto* a = std::get_if<AtomId>(&head)) return *a;
    return std::nullopt;
  }

  /// Atoms of the positive extended literals, in body order.
  std::vector<AtomId> positive_atoms() const {
    std::vector<AtomId> out;
    for (const auto& lit : body) {
      if (const auto* p = std::get_if<PositiveLiteral>(&lit)) out.push_back(p->atom);
    }
    return out;
  }

  bool has_negation() const {
    for (const auto& lit : body) {
      if (std::holds_alternative<NegatedLiteral>(lit)) return true;
    }
    return false;
  }

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A finite set of ground rules over an explicit Herbrand base.
///
/// The base is the symbol table; parsed programs contain exactly the atoms
/// occurring in their rules. Derived programs (reducts) keep the base of the
/// program they came from so that interpretations stay compatible.
class Program {
 public:
  Program() = default;

  /// Returns the id of `name`, adding it to the base when new.
  AtomId intern(std::string_view name) {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    auto id = static_cast<AtomId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    by_head_.emplace_back();
    return id;
  }

  std::optional<AtomId> find(std::string_view name) const {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return std::nullopt;
  }

  /// Adds a rule whose atoms are already interned. Exact duplicates are
  /// dropped; returns false in that case.
  bool add_rule(Rule rule) {
    for (const auto& r : rules_) {
      if (r == rule) return false;
    }
    auto index = rules_.size();
    if (auto h = rule.head_atom()) by_head_.at(*h).push_back(index);
    rules_.push_back(std::move(rule));
    return true;
  }

  std::size_t atom_count() const noexcept { return names_.size(); }
  const std::string& name(AtomId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  /// Indices (into rules()) of the rules with head `a`.
  std::span<const std::size_t> rules_for(AtomId a) const { return by_head_.at(a); }

  bool is_simple() const {
    for (const auto& r : rules_) {
      if (r.has_negation()) return false;
    }
    return true;
  }

  /// Same base, no rules.
  Program with_same_base() const {
    Program p;
    p.names_ = names_;
    p.ids_ = ids_;
    p.by_head_.assign(names_.size(), {});
    return p;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> ids_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_head_;
};

}  // namespace faspkit
