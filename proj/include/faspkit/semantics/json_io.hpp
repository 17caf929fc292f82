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

#include <nlohmann/json.hpp>

#include "faspkit/error.hpp"
#include "faspkit/frontend/program.hpp"
#include "faspkit/semantics/interpretation.hpp"

namespace faspkit {

/// {"atom": "0.8", ...}; zero atoms omitted, keys sorted. Auxiliary atoms from
/// normalization are left out unless `include_aux`.
inline nlohmann::json interpretation_to_json(const Program& p, const Interpretation& I,
                                             bool include_aux = false) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < I.size(); ++i) {
    auto id = static_cast<AtomId>(i);
    if (I[id].is_zero()) continue;
    if (!include_aux && is_aux_atom(p.name(id))) continue;
    out[p.name(id)] = I[id].to_string();
  }
  return out;
}

/// Inverse of interpretation_to_json. Values are strings ("0.8", "4/5") or
/// the integers 0 and 1; absent atoms read 0.
inline Interpretation interpretation_from_json(const Program& p, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("interpretation must be a JSON object");
  Interpretation out(p.atom_count());
  for (const auto& [name, v] : j.items()) {
    auto id = p.find(name);
    if (!id) throw UsageError("atom '" + name + "' is not in the Herbrand base");
    std::optional<TruthValue> tv;
    if (v.is_string()) {
      tv = TruthValue::parse(v.get<std::string>());
    } else if (v.is_number_integer() && (v.get<long long>() == 0 || v.get<long long>() == 1)) {
      tv = TruthValue(v.get<long long>(), 1);
    }
    if (!tv) throw UsageError("value of '" + name + "' must be a decimal or p/q string");
    out[*id] = *tv;
  }
  return out;
}

inline Interpretation interpretation_from_json(const Program& p, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed interpretation JSON: ") + e.what());
  }
  return interpretation_from_json(p, j);
}

}  // namespace faspkit
