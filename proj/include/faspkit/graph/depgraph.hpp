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
#include <string>
#include <utility>
#include <vector>

#include "faspkit/error.hpp"
#include "faspkit/frontend/program.hpp"

namespace faspkit {

/// Positive dependency graph: (a, b) iff some rule with head a has b in its
/// positive body.
class DepGraph {
 public:
  DepGraph() = default;
  explicit DepGraph(std::vector<std::string> names)
      : names_(std::move(names)), succ_(names_.size()) {}

  void add_edge(AtomId a, AtomId b) {
    auto& s = succ_.at(a);
    auto it = std::lower_bound(s.begin(), s.end(), b);
    if (it == s.end() || *it != b) s.insert(it, b);
  }

  std::size_t vertex_count() const noexcept { return succ_.size(); }
  const std::vector<AtomId>& successors(AtomId a) const { return succ_.at(a); }
  bool has_edge(AtomId a, AtomId b) const {
    return std::binary_search(succ_.at(a).begin(), succ_.at(a).end(), b);
  }
  const std::string& name(AtomId a) const { return names_.at(a); }

  /// All edges, ordered by (source id, target id).
  std::vector<std::pair<AtomId, AtomId>> edges() const {
    std::vector<std::pair<AtomId, AtomId>> out;
    for (std::size_t a = 0; a < succ_.size(); ++a) {
      for (AtomId b : succ_[a]) out.emplace_back(static_cast<AtomId>(a), b);
    }
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<AtomId>> succ_;
};

inline DepGraph build_depgraph(const Program& p) {
  DepGraph g(p.names());
  for (const auto& r : p.rules()) {
    auto h = r.head_atom();
    if (!h) continue;
    for (AtomId b : r.positive_atoms()) g.add_edge(*h, b);
  }
  return g;
}

/// A loop is kept as its atom ids in ascending order.
using Loop = std::vector<AtomId>;

namespace detail {

// Iterative Tarjan over the subgraph induced by `in_s`.
inline std::vector<std::vector<AtomId>> induced_sccs(const DepGraph& g,
                                                     const std::vector<bool>& in_s) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<AtomId> stack;
  std::vector<std::vector<AtomId>> out;
  std::size_t counter = 0;

  struct Frame {
    AtomId v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (!in_s[root] || index[root] != kUnvisited) continue;
    std::vector<Frame> call{{static_cast<AtomId>(root), 0}};
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<AtomId>(root));
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.successors(f.v);
      if (f.next < succ.size()) {
        AtomId w = succ[f.next++];
        if (!in_s[w]) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      AtomId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<AtomId> comp;
        AtomId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

inline std::vector<bool> membership(const DepGraph& g, std::span<const AtomId> S) {
  std::vector<bool> in_s(g.vertex_count(), false);
  for (AtomId a : S) {
    if (a >= g.vertex_count()) throw UsageError("atom set is not inside the graph's vertices");
    in_s[a] = true;
  }
  return in_s;
}

inline bool has_cycle(const DepGraph& g, const std::vector<AtomId>& comp) {
  return comp.size() > 1 || g.has_edge(comp.front(), comp.front());
}

inline std::vector<std::string> sorted_names(const DepGraph& g, const Loop& l) {
  std::vector<std::string> out;
  for (AtomId a : l) out.push_back(g.name(a));
  std::sort(out.begin(), out.end());
  return out;
}

// Every loop within one SCC of G[S], by bitmask over the SCC's members.
inline void loops_in_component(const DepGraph& g, const std::vector<AtomId>& comp,
                               std::vector<Loop>& out) {
  const std::size_t k = comp.size();
  std::vector<std::uint32_t> adj(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (g.has_edge(comp[i], comp[j])) adj[i] |= std::uint32_t{1} << j;
    }
  }
  auto reach = [&](std::uint32_t mask, std::size_t start, bool forward) {
    std::uint32_t seen = std::uint32_t{1} << start, frontier = seen;
    while (frontier) {
      std::uint32_t nxt = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (!(frontier >> i & 1U)) continue;
        if (forward) {
          nxt |= adj[i] & mask;
        } else {
          for (std::size_t j = 0; j < k; ++j) {
            if ((mask >> j & 1U) && (adj[j] >> i & 1U)) nxt |= std::uint32_t{1} << j;
          }
        }
      }
      frontier = nxt & ~seen;
      seen |= nxt;
    }
    return seen;
  };
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    std::size_t first = static_cast<std::size_t>(__builtin_ctz(mask));
    bool ok;
    if ((mask & (mask - 1)) == 0) {
      ok = (adj[first] >> first & 1U) != 0;
    } else {
      ok = (reach(mask, first, true) & mask) == mask && (reach(mask, first, false) & mask) == mask;
    }
    if (!ok) continue;
    Loop l;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) l.push_back(comp[i]);
    }
    out.push_back(std::move(l));
  }
}

}  // namespace detail

/// SCCs of G[S] that contain a cycle, ordered by their smallest atom name.
inline std::vector<Loop> maximal_loops(const DepGraph& g, std::span<const AtomId> S) {
  auto comps = detail::induced_sccs(g, detail::membership(g, S));
  std::vector<Loop> out;
  for (auto& c : comps) {
    if (detail::has_cycle(g, c)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [&](const Loop& a, const Loop& b) {
    return detail::sorted_names(g, a) < detail::sorted_names(g, b);
  });
  return out;
}

inline constexpr std::size_t kDefaultLoopGuard = 16;

/// Every subset of S that is a loop, ascending by size and then by sorted
/// atom names. Loops never cross SCCs of G[S], so the enumeration runs per
/// component and the guard bounds the largest component.
inline std::vector<Loop> all_loops(const DepGraph& g, std::span<const AtomId> S,
                                   std::size_t guard = kDefaultLoopGuard) {
  auto comps = detail::induced_sccs(g, detail::membership(g, S));
  std::vector<Loop> out;
  for (const auto& c : comps) {
    if (!detail::has_cycle(g, c)) continue;
    if (c.size() > guard || c.size() > 31) {
      throw GuardError("all_loops: strongly connected component of " + std::to_string(c.size()) +
                       " atoms exceeds the guard of " + std::to_string(guard));
    }
    detail::loops_in_component(g, c, out);
  }
  std::sort(out.begin(), out.end(), [&](const Loop& a, const Loop& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return detail::sorted_names(g, a) < detail::sorted_names(g, b);
  });
  return out;
}

inline std::vector<Loop> all_loops(const DepGraph& g, std::initializer_list<AtomId> S,
                                   std::size_t guard = kDefaultLoopGuard) {
  return all_loops(g, std::span<const AtomId>(S.begin(), S.size()), guard);
}

inline std::vector<Loop> maximal_loops(const DepGraph& g, std::initializer_list<AtomId> S) {
  return maximal_loops(g, std::span<const AtomId>(S.begin(), S.size()));
}

/// Def-style loop test: nonempty, and every ordered pair is joined by a
/// nonempty path inside the set.
inline bool is_loop(const DepGraph& g, std::span<const AtomId> L) {
  if (L.empty()) return false;
  auto comps = detail::induced_sccs(g, detail::membership(g, L));
  return comps.size() == 1 && detail::has_cycle(g, comps.front());
}

/// A program has no loops iff every SCC of its graph is a singleton without
/// a self-edge.
inline bool is_loop_free(const DepGraph& g) {
  std::vector<AtomId> all(g.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<AtomId>(i);
  return maximal_loops(g, all).empty();
}

}  // namespace faspkit
