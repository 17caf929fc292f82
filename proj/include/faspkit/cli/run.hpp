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
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "faspkit/assat/assat.hpp"
#include "faspkit/error.hpp"
#include "faspkit/frontend/grounder.hpp"
#include "faspkit/frontend/printer.hpp"
#include "faspkit/fuzzysat/milp.hpp"
#include "faspkit/semantics/json_io.hpp"
#include "faspkit/semantics/oracle.hpp"
#include "faspkit/translate/completion.hpp"

namespace faspkit::cli {

enum class ExitCode : int {
  Ok = 0,
  NoAnswerSet = 1,
  Usage = 2,
  Fragment = 3,
  Internal = 4,
};

struct Invocation {
  std::string command;  // solve, check, complete, loops, ground, export-lp, oracle
  std::string input;
  std::string backend = "milp";
  std::int64_t grid_denominator = 0;
  std::string loop_mode = "all";
  bool trace = false;
  bool include_aux = false;
  std::size_t max_support = kDefaultLoopGuard;
  bool pretty = false;
  /// JSON interpretation, or "@path" to read it from a file.
  std::optional<std::string> model;
  std::vector<std::string> maximize;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void print_json(std::ostream& out, const nlohmann::json& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

inline void print_table(std::ostream& out, const nlohmann::json& interp) {
  if (interp.empty()) out << "  (all atoms 0)\n";
  for (const auto& [k, v] : interp.items()) out << "  " << k << " = " << v.get<std::string>() << "\n";
}

inline std::vector<std::size_t> atom_ids(const Program& p, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    auto id = p.find(n);
    if (!id) throw UsageError("atom '" + n + "' is not in the Herbrand base");
    out.push_back(*id);
  }
  return out;
}

inline int solve_cmd(const Invocation& inv, const Program& p, std::ostream& out) {
  SolveOptions opts;
  if (inv.backend == "grid") {
    opts.backend = Backend::Grid;
  } else if (inv.backend != "milp") {
    throw UsageError("--backend must be milp or grid");
  }
  if (inv.loop_mode == "maximal") {
    opts.loop_mode = LoopMode::Maximal;
  } else if (inv.loop_mode != "all") {
    throw UsageError("--loop-mode must be all or maximal");
  }
  opts.grid_denominator = inv.grid_denominator;
  opts.max_support = inv.max_support;
  opts.maximize = atom_ids(p, inv.maximize);
  SolveTrace t = solve(p, opts);
  nlohmann::json j = to_json(p, t, inv.include_aux);
  if (!inv.trace) j.erase("iterations");
  if (inv.pretty && !inv.trace) {
    if (t.answer_set) {
      out << "answer set:\n";
      print_table(out, j["answer_set"]);
    } else {
      out << "no answer set\n";
    }
  } else {
    print_json(out, j, inv.pretty);
  }
  return static_cast<int>(t.answer_set ? ExitCode::Ok : ExitCode::NoAnswerSet);
}

inline Interpretation model_arg(const Invocation& inv, const Program& p) {
  if (!inv.model) throw UsageError("--model is required for this command");
  std::string text = *inv.model;
  if (!text.empty() && text.front() == '@') text = read_file(text.substr(1));
  return interpretation_from_json(p, text);
}

inline int check_cmd(const Invocation& inv, const Program& p, std::ostream& out) {
  CheckReport r = check(p, model_arg(inv, p), inv.max_support);
  nlohmann::json j = to_json(p, r, inv.include_aux);
  if (!inv.pretty) {
    print_json(out, j, false);
    return 0;
  }
  out << "model: " << (r.model ? "true" : "false") << "\n"
      << "model of completion: " << (r.model_of_completion ? "true" : "false") << "\n"
      << "answer set: " << (r.answer_set ? "true" : "false") << "\n"
      << "lfp of reduct:\n";
  print_table(out, j["lfp"]);
  out << "support of difference: " << j["support"].dump() << "\n";
  for (const auto& l : j["loops"]) {
    out << "  loop " << l["atoms"].dump() << ": " << l["formula"].get<std::string>()
        << (l["violated"].get<bool>() ? "  [violated]" : "  [holds]") << "\n";
  }
  return 0;
}

inline int loops_cmd(const Invocation& inv, const Program& p, std::ostream& out) {
  std::vector<AtomId> scope;
  if (inv.model) {
    Interpretation M = model_arg(inv, p);
    scope = difference(M, lfp(reduct(p, M))).support();
  } else {
    for (std::size_t i = 0; i < p.atom_count(); ++i) scope.push_back(static_cast<AtomId>(i));
  }
  DepGraph g = build_depgraph(p);
  auto loops = inv.loop_mode == "maximal" ? maximal_loops(g, scope) : all_loops(g, scope, inv.max_support);
  for (const auto& L : loops) out << atoms_json(p, L).dump() << "\n";
  return 0;
}

inline int oracle_cmd(const Invocation& inv, const Program& p, std::ostream& out) {
  std::int64_t D = inv.grid_denominator > 0 ? inv.grid_denominator : constant_lcm(p);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& I : grid_answer_sets(p, D)) arr.push_back(interpretation_to_json(p, I, inv.include_aux));
  if (inv.pretty) {
    out << arr.size() << " answer set(s) on the 1/" << D << " grid\n";
    for (const auto& a : arr) {
      out << "-\n";
      print_table(out, a);
    }
  } else {
    print_json(out, arr, false);
  }
  return static_cast<int>(arr.empty() ? ExitCode::NoAnswerSet : ExitCode::Ok);
}

}  // namespace detail

/// Runs one command. Results go to `out`, diagnostics to `err`; the return
/// value is the process exit status.
inline int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    if (inv.grid_denominator < 0) throw UsageError("--grid-denominator must be at least 1");
    Program p = load_program(detail::read_file(inv.input));
    if (inv.command == "solve") return detail::solve_cmd(inv, p, out);
    if (inv.command == "check") return detail::check_cmd(inv, p, out);
    if (inv.command == "ground") {
      out << print_program(p);
      return 0;
    }
    if (inv.command == "complete") {
      out << print_theory(completion(p));
      return 0;
    }
    if (inv.command == "loops") return detail::loops_cmd(inv, p, out);
    if (inv.command == "export-lp") {
      MilpModel m = encode(completion(p));
      if (!inv.maximize.empty()) set_maximize_atoms(m, detail::atom_ids(p, inv.maximize));
      out << export_lp(m);
      return 0;
    }
    if (inv.command == "oracle") return detail::oracle_cmd(inv, p, out);
    throw UsageError("unknown command '" + inv.command + "'");
  } catch (const FragmentError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Fragment);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Internal);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }
}

}  // namespace faspkit::cli
