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

#include <string>
#include <variant>

#include "faspkit/frontend/program.hpp"

namespace faspkit {

inline std::string print_literal(const Program& p, const ExtendedLiteral& lit) {
  return std::visit(
      [&](const auto& l) -> std::string {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, PositiveLiteral>) {
          return p.name(l.atom);
        } else if constexpr (std::is_same_v<L, ConstantLiteral>) {
          return l.value.to_string();
        } else {
          return std::string(to_string(l.negator)) + " " + p.name(l.atom);
        }
      },
      lit);
}

/// Body text. A one-literal TM body prints bare, which is also how the parser
/// reads a bare literal back.
inline std::string print_body(const Program& p, const Rule& r) {
  if (r.body.size() == 1 && r.tnorm == TNormKind::Minimum) return print_literal(p, r.body.front());
  std::string out(to_string(r.tnorm));
  out += "(";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += print_literal(p, r.body[i]);
  }
  return out + ")";
}

inline std::string print_rule(const Program& p, const Rule& r) {
  std::string out;
  if (!r.label.empty()) out += r.label + ": ";
  if (auto h = r.head_atom()) {
    out += p.name(*h);
  } else {
    out += std::get<TruthValue>(r.head).to_string();
  }
  return out + " <- " + print_body(p, r) + ".";
}

/// One rule per line, in program order.
inline std::string print_program(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) out += print_rule(p, r) + "\n";
  return out;
}

}  // namespace faspkit
