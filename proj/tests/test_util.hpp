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

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faspkit/frontend/grounder.hpp"
#include "faspkit/semantics/interpretation.hpp"
#include "faspkit/semantics/json_io.hpp"

namespace faspkit::testing {

inline TruthValue tv(std::string_view s) { return *TruthValue::parse(s); }

inline std::string fixture_path(const std::string& name) { return std::string(FASPKIT_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Program fixture(const std::string& name) { return load_program(read_fixture(name)); }

/// Interpretation from (name, decimal) pairs; unlisted atoms are 0.
inline Interpretation interp(const Program& p, std::vector<std::pair<std::string, std::string>> values) {
  Interpretation I(p.atom_count());
  for (const auto& [n, v] : values) {
    auto id = p.find(n);
    if (!id) throw UsageError("unknown atom " + n);
    I[*id] = tv(v);
  }
  return I;
}

inline AtomId atom(const Program& p, std::string_view name) {
  auto id = p.find(name);
  if (!id) throw UsageError("unknown atom " + std::string(name));
  return *id;
}

}  // namespace faspkit::testing
