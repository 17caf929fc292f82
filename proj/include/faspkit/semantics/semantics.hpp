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
#include <span>
#include <string>
#include <vector>

#include "faspkit/core/connectives.hpp"
#include "faspkit/error.hpp"
#include "faspkit/frontend/program.hpp"
#include "faspkit/semantics/interpretation.hpp"

namespace faspkit {

namespace detail {

inline void require_base(const Program& p, const Interpretation& I, const char* op) {
  if (I.size() != p.atom_count()) {
    throw UsageError(std::string(op) + ": interpretation has " + std::to_string(I.size()) +
                     " atoms, program base has " + std::to_string(p.atom_count()));
  }
}

inline TruthValue literal_value(const Interpretation& I, const ExtendedLiteral& lit) {
  if (const auto* p = std::get_if<PositiveLiteral>(&lit)) return I[p->atom];
  if (const auto* c = std::get_if<ConstantLiteral>(&lit)) return c->value;
  const auto& n = std::get<NegatedLiteral>(lit);
  return negator_apply(n.negator, I[n.atom]);
}

inline TruthValue head_value(const Interpretation& I, const Rule& r) {
  if (auto h = r.head_atom()) return I[*h];
  return std::get<TruthValue>(r.head);
}

}  // namespace detail

/// I(body(r)).
inline TruthValue eval_body(const Interpretation& I, const Rule& r) {
  std::vector<TruthValue> args;
  args.reserve(r.body.size());
  for (const auto& lit : r.body) args.push_back(detail::literal_value(I, lit));
  return tnorm_apply(r.tnorm, args);
}

/// I(r) = I_r(I(body(r)), I(head(r))) with the residual implicator of the
/// rule's t-norm.
inline TruthValue eval_rule(const Interpretation& I, const Rule& r) {
  return residual_implicator(r.tnorm, eval_body(I, r), detail::head_value(I, r));
}

/// Every rule evaluates to 1, i.e. body <= head everywhere.
inline bool is_model(const Program& p, const Interpretation& I) {
  detail::require_base(p, I, "is_model");
  for (const auto& r : p.rules()) {
    if (eval_body(I, r) > detail::head_value(I, r)) return false;
  }
  return true;
}

/// P^I: each negated literal N(b) becomes the constant N(I(b)).
inline Program reduct(const Program& p, const Interpretation& I) {
  detail::require_base(p, I, "reduct");
  Program out = p.with_same_base();
  for (const auto& r : p.rules()) {
    Rule rr = r;
    for (auto& lit : rr.body) {
      if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
        lit = ConstantLiteral{negator_apply(n->negator, I[n->atom])};
      }
    }
    out.add_rule(std::move(rr));
  }
  return out;
}

/// T_P(I)(a) = sup { I(body(r)) | r in P_a }, sup of nothing = 0. Constraints
/// contribute to no atom.
inline Interpretation tp_apply(const Program& p, const Interpretation& I) {
  detail::require_base(p, I, "tp_apply");
  Interpretation out(p.atom_count());
  for (const auto& r : p.rules()) {
    if (auto h = r.head_atom()) out[*h] = tv_max(out[*h], eval_body(I, r));
  }
  return out;
}

/// lcm of the denominators of all constants in `p` (constraint heads included).
inline std::int64_t constant_lcm(const Program& p) {
  std::int64_t l = 1;
  for (const auto& r : p.rules()) {
    if (r.is_constraint()) l = checked_lcm(l, std::get<TruthValue>(r.head).denominator());
    for (const auto& lit : r.body) {
      if (const auto* c = std::get_if<ConstantLiteral>(&lit)) l = checked_lcm(l, c->value.denominator());
    }
  }
  return l;
}

/// Least fixpoint of T_P for a simple program, iterating from the zero
/// interpretation. Every iterate is a multiple of 1/L (L = constant_lcm), so
/// more than |base|*L + 1 rounds means something is broken.
inline Interpretation lfp(const Program& p) {
  if (!p.is_simple()) throw UsageError("lfp: program is not simple (apply reduct first)");
  const std::int64_t L = constant_lcm(p);
  const __int128 bound = static_cast<__int128>(p.atom_count()) * L + 1;
  Interpretation cur(p.atom_count());
  for (__int128 round = 0; round < bound + 1; ++round) {
    Interpretation nxt = tp_apply(p, cur);
    if (nxt == cur) return cur;
    cur = std::move(nxt);
  }
  throw InternalError("lfp: no fixpoint after " + std::to_string(static_cast<std::int64_t>(bound)) +
                      " iterations");
}

/// Answer set iff model and I = lfp(T_{P^I}).
inline bool is_answer_set(const Program& p, const Interpretation& I) {
  return is_model(p, I) && lfp(reduct(p, I)) == I;
}

/// Unfoundedness of U w.r.t. I: for every u in U and r in P_u, either U meets
/// posbody(r), or I(u) > I(body(r)), or I(body(r)) = 0.
inline bool is_unfounded(const Program& p, const Interpretation& I, std::span<const AtomId> U) {
  detail::require_base(p, I, "is_unfounded");
  std::vector<bool> in_u(p.atom_count(), false);
  for (AtomId u : U) {
    if (u >= p.atom_count()) throw UsageError("is_unfounded: atom outside the base");
    in_u[u] = true;
  }
  for (AtomId u : U) {
    for (std::size_t ri : p.rules_for(u)) {
      const Rule& r = p.rules()[ri];
      bool meets = false;
      for (AtomId b : r.positive_atoms()) meets = meets || in_u[b];
      if (meets) continue;
      TruthValue body = eval_body(I, r);
      if (I[u] > body || body.is_zero()) continue;
      return false;
    }
  }
  return true;
}

inline bool is_unfounded(const Program& p, const Interpretation& I,
                         std::initializer_list<AtomId> U) {
  return is_unfounded(p, I, std::span<const AtomId>(U.begin(), U.size()));
}

/// No unfounded set meets supp(I). Exhaustive over the nonempty subsets of
/// supp(I): if U is unfounded then so is U n supp(I), because a positive body
/// atom outside the support zeroes the body. `max_support` bounds the
/// enumeration.
inline bool is_unfounded_free(const Program& p, const Interpretation& I,
                              std::size_t max_support = 20) {
  detail::require_base(p, I, "is_unfounded_free");
  auto supp = I.support();
  if (supp.size() > max_support) {
    throw GuardError("is_unfounded_free: support has " + std::to_string(supp.size()) +
                     " atoms, guard is " + std::to_string(max_support));
  }
  const std::uint64_t n = supp.size();
  std::vector<AtomId> U;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    U.clear();
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) U.push_back(supp[i]);
    }
    if (is_unfounded(p, I, U)) return false;
  }
  return true;
}

}  // namespace faspkit
