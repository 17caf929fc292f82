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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "faspkit/error.hpp"
#include "faspkit/translate/theory.hpp"

namespace faspkit {

using Rational = mpq_class;

inline Rational to_rational(const TruthValue& v) {
  Rational q(static_cast<long>(v.numerator()), static_cast<unsigned long>(v.denominator()));
  q.canonicalize();
  return q;
}

/// Exact conversion back; throws when the value leaves [0,1] or 64 bits.
inline TruthValue to_truth_value(const Rational& q) {
  if (q < 0 || q > 1) throw InternalError("value " + q.get_str() + " is outside [0,1]");
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
    throw Error("value " + q.get_str() + " does not fit 64-bit truth values");
  }
  return TruthValue(q.get_num().get_si(), q.get_den().get_si());
}

/// Affine form sum(coef * var) + constant.
struct LinExpr {
  std::map<std::size_t, Rational> terms;
  Rational constant = 0;

  LinExpr& add(const LinExpr& o, const Rational& scale = 1) {
    for (const auto& [v, c] : o.terms) {
      Rational& slot = terms[v];
      slot += scale * c;
      if (slot == 0) terms.erase(v);
    }
    constant += scale * o.constant;
    return *this;
  }
  static LinExpr var(std::size_t v) {
    LinExpr e;
    e.terms[v] = 1;
    return e;
  }
  static LinExpr of(const Rational& c) {
    LinExpr e;
    e.constant = c;
    return e;
  }
};

enum class Relation { Le, Eq, Ge };

/// sum(terms) rel rhs.
struct Row {
  std::vector<std::pair<std::size_t, Rational>> terms;
  Relation rel = Relation::Le;
  Rational rhs = 0;
  std::string comment;
};

struct MilpVar {
  std::string name;
  Rational lower = 0;
  Rational upper = 1;
  bool binary = false;
  std::string provenance;
};

/// Continuous variables in [0,1], binaries, linear rows. Variable i < atom
/// count is the atom with that id.
struct MilpModel {
  std::vector<MilpVar> vars;
  std::vector<Row> rows;
  std::size_t atom_count = 0;
  std::vector<std::string> atom_names;
  /// Minimized when present.
  std::optional<LinExpr> objective;

  std::vector<std::size_t> binaries() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i].binary) out.push_back(i);
    }
    return out;
  }
  std::size_t aux_count() const {
    std::size_t n = 0;
    for (std::size_t i = atom_count; i < vars.size(); ++i) n += vars[i].binary ? 0 : 1;
    return n;
  }
};

namespace detail {

class Encoder {
 public:
  explicit Encoder(const Theory& th) {
    m_.atom_count = th.names.size();
    m_.atom_names = th.names;
    for (std::size_t i = 0; i < th.names.size(); ++i) {
      m_.vars.push_back({"x" + std::to_string(i), 0, 1, false, th.names[i]});
    }
    for (const auto& c : th.constraints) {
      LinExpr diff = lin(c.lhs);
      diff.add(lin(c.rhs), -1);
      add_row(diff, c.kind == Constraint::Kind::Eq ? Relation::Eq : Relation::Le,
              print_constraint(th.names, c));
    }
  }

  MilpModel take() { return std::move(m_); }

 private:
  LinExpr lin(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Const:
        return LinExpr::of(to_rational(e.value));
      case Expr::Kind::Var:
        return LinExpr::var(e.atom);
      case Expr::Kind::NegL: {
        LinExpr out = LinExpr::of(1);
        out.add(lin(e.args.front()), -1);
        return out;
      }
      case Expr::Kind::NegG:
        throw FragmentError(diag::kGoedelNotMilp);
      case Expr::Kind::Max:
      case Expr::Kind::Min:
        return extremum(e);
      case Expr::Kind::LNorm:
        return lnorm(e);
    }
    throw InternalError("encode: bad expression kind");
  }

  std::size_t aux(const Expr& e) {
    m_.vars.push_back({"z" + std::to_string(z_++), 0, 1, false, print_expr(m_.atom_names, e)});
    return m_.vars.size() - 1;
  }
  std::size_t binary(const std::string& why) {
    m_.vars.push_back({"d" + std::to_string(d_++), 0, 1, true, why});
    return m_.vars.size() - 1;
  }

  // max: z >= x_i, z <= x_i + 1 - d_i, sum d_i = 1. min mirrors it.
  LinExpr extremum(const Expr& e) {
    std::vector<LinExpr> xs;
    for (const auto& a : e.args) xs.push_back(lin(a));
    const bool is_max = e.kind == Expr::Kind::Max;
    std::size_t z = aux(e);
    const std::string zname = m_.vars[z].name;
    LinExpr selectors;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::size_t d = binary(zname + " attains argument " + std::to_string(i));
      selectors.add(LinExpr::var(d));
      LinExpr tight = LinExpr::var(z);  // z - x_i
      tight.add(xs[i], -1);
      add_row(tight, is_max ? Relation::Ge : Relation::Le, zname + " bound " + std::to_string(i));
      LinExpr sel = tight;  // max: z - x_i + d_i <= 1; min: z - x_i - d_i >= -1
      sel.add(LinExpr::var(d), is_max ? 1 : -1);
      sel.constant -= is_max ? 1 : -1;
      add_row(sel, is_max ? Relation::Le : Relation::Ge, zname + " select " + std::to_string(i));
    }
    selectors.constant = -1;
    add_row(selectors, Relation::Eq, zname + " one selector");
    return LinExpr::var(z);
  }

  // s = sum x_i - (n-1); z >= s, z >= 0, z <= s + d(n-1), z <= 1 - d.
  LinExpr lnorm(const Expr& e) {
    LinExpr s;
    for (const auto& a : e.args) s.add(lin(a));
    const Rational n1 = static_cast<long>(e.args.size() - 1);
    s.constant -= n1;
    std::size_t z = aux(e);
    const std::string zname = m_.vars[z].name;
    std::size_t d = binary(zname + " clipped at 0");
    LinExpr lo = LinExpr::var(z);
    lo.add(s, -1);
    add_row(lo, Relation::Ge, zname + " >= sum");
    LinExpr hi = lo;
    hi.add(LinExpr::var(d), -n1);
    add_row(hi, Relation::Le, zname + " <= sum unless clipped");
    LinExpr cap = LinExpr::var(z);
    cap.add(LinExpr::var(d));
    cap.constant = -1;
    add_row(cap, Relation::Le, zname + " is 0 when clipped");
    return LinExpr::var(z);
  }

  // Adds `e rel 0`.
  void add_row(const LinExpr& e, Relation rel, std::string comment) {
    Row r;
    for (const auto& [v, c] : e.terms) r.terms.emplace_back(v, c);
    r.rel = rel;
    r.rhs = -e.constant;
    r.comment = std::move(comment);
    m_.rows.push_back(std::move(r));
  }

  MilpModel m_;
  std::size_t z_ = 0;
  std::size_t d_ = 0;
};

}  // namespace detail

/// Mixed-integer encoding of a theory. Throws FragmentError on not_m.
inline MilpModel encode(const Theory& th) { return detail::Encoder(th).take(); }

/// Linear objective over atoms: maximize sum of the named atoms (as a
/// minimization of the negated sum).
inline void set_maximize_atoms(MilpModel& m, const std::vector<std::size_t>& atoms) {
  LinExpr obj;
  for (std::size_t a : atoms) obj.add(LinExpr::var(a), -1);
  m.objective = obj;
}

namespace detail {

inline bool decimal_exact(const mpz_class& den) {
  mpz_class d = den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

inline std::string decimal(const Rational& q) {
  mpz_class num = q.get_num(), den = q.get_den();
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  mpz_class ip = num / den, rem = num % den;
  std::string out = sign + ip.get_str();
  if (rem == 0) return out;
  out += ".";
  while (rem != 0) {
    rem *= 10;
    mpz_class digit = rem / den;
    out += digit.get_str();
    rem %= den;
  }
  return out;
}

inline std::string lp_row(const MilpModel& m, const std::vector<std::pair<std::size_t, Rational>>& terms,
                          const Rational& rhs, const char* rel) {
  bool exact = decimal_exact(rhs.get_den());
  for (const auto& t : terms) exact = exact && decimal_exact(t.second.get_den());
  mpz_class scale = 1;
  if (!exact) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), rhs.get_den().get_mpz_t());
    for (const auto& t : terms) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.second.get_den().get_mpz_t());
  }
  std::string out;
  bool first = true;
  for (const auto& [v, c] : terms) {
    Rational k = c * Rational(scale);
    std::string mag = decimal(abs(k));
    out += first ? (k < 0 ? "- " : "") : (k < 0 ? " - " : " + ");
    first = false;
    out += (mag == "1" ? "" : mag + " ") + m.vars[v].name;
  }
  if (first) out += "0 " + m.vars.front().name;
  if (rel) out += std::string(" ") + rel + " " + decimal(rhs * Rational(scale));
  return out;
}

}  // namespace detail

/// Text LP file (Minimize / Subject To / Bounds / Binary / End). Rationals
/// print as decimals when exact; otherwise the row is scaled to integers.
inline std::string export_lp(const MilpModel& m) {
  std::string out = "\\ faspkit MILP model\n";
  for (const auto& v : m.vars) out += "\\ " + v.name + ": " + v.provenance + "\n";
  out += "Minimize\n obj: ";
  if (m.objective && !m.objective->terms.empty()) {
    std::vector<std::pair<std::size_t, Rational>> terms(m.objective->terms.begin(),
                                                        m.objective->terms.end());
    out += detail::lp_row(m, terms, 0, nullptr);
  } else {
    out += m.vars.empty() ? "0" : "0 " + m.vars.front().name;
  }
  out += "\nSubject To\n";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    const Row& r = m.rows[i];
    const char* rel = r.rel == Relation::Le ? "<=" : r.rel == Relation::Ge ? ">=" : "=";
    out += " \\ " + r.comment + "\n";
    out += " c" + std::to_string(i) + ": " + detail::lp_row(m, r.terms, r.rhs, rel) + "\n";
  }
  out += "Bounds\n";
  for (const auto& v : m.vars) {
    if (v.binary) continue;
    out += " " + detail::decimal(v.lower) + " <= " + v.name + " <= " + detail::decimal(v.upper) + "\n";
  }
  out += "Binary\n";
  for (const auto& v : m.vars) {
    if (v.binary) out += " " + v.name + "\n";
  }
  return out + "End\n";
}

}  // namespace faspkit
