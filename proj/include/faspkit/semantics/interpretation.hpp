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
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faspkit/core/connectives.hpp"
#include "faspkit/core/truth_value.hpp"
#include "faspkit/error.hpp"
#include "faspkit/frontend/program.hpp"

namespace faspkit {

/// Total assignment of truth values to a Herbrand base, indexed by AtomId.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::size_t base_size) : values_(base_size) {}
  explicit Interpretation(std::vector<TruthValue> values) : values_(std::move(values)) {}

  /// Builds an interpretation of `p` from (name, value) pairs; unlisted atoms
  /// read 0. Throws UsageError on names outside the base.
  static Interpretation of(const Program& p,
                           std::initializer_list<std::pair<std::string_view, TruthValue>> values) {
    Interpretation out(p.atom_count());
    for (const auto& [name, v] : values) {
      auto id = p.find(name);
      if (!id) throw UsageError("atom '" + std::string(name) + "' is not in the Herbrand base");
      out[*id] = v;
    }
    return out;
  }

  std::size_t size() const noexcept { return values_.size(); }
  const TruthValue& operator[](AtomId a) const { return values_[a]; }
  TruthValue& operator[](AtomId a) { return values_[a]; }
  const std::vector<TruthValue>& values() const noexcept { return values_; }

  /// supp(I): atoms with a nonzero value, ascending by id.
  std::vector<AtomId> support() const {
    std::vector<AtomId> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!values_[i].is_zero()) out.push_back(static_cast<AtomId>(i));
    }
    return out;
  }

  /// Pointwise inclusion I <= J.
  bool subset_of(const Interpretation& other) const {
    if (other.size() != size()) return false;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] > other.values_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
  friend auto operator<=>(const Interpretation& a, const Interpretation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<TruthValue> values_;
};

/// Pointwise truncated difference (A - B)(x) = max(0, A(x) - B(x)).
inline Interpretation difference(const Interpretation& a, const Interpretation& b) {
  if (a.size() != b.size()) throw UsageError("difference: interpretations over different bases");
  Interpretation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto id = static_cast<AtomId>(i);
    out[id] = truncated_difference(a[id], b[id]);
  }
  return out;
}

/// Human-readable "{a: 0.3, b: 1/3}" with zero atoms omitted.
inline std::string to_string(const Program& p, const Interpretation& I) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < I.size(); ++i) {
    auto id = static_cast<AtomId>(i);
    if (I[id].is_zero()) continue;
    if (!first) out += ", ";
    first = false;
    out += p.name(id) + ": " + I[id].to_string();
  }
  return out + "}";
}

}  // namespace faspkit
