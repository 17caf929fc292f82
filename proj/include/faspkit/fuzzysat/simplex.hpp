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
#include <optional>
#include <string>
#include <vector>

#include "faspkit/error.hpp"
#include "faspkit/fuzzysat/milp.hpp"

namespace faspkit {

struct LpResult {
  bool feasible = false;
  std::vector<Rational> x;  // structural variables only
  Rational objective = 0;
};

namespace detail {

// Bounded-variable primal simplex on a dense exact tableau. Every row gets a
// slack (Le rows) or nothing (Eq rows); rows the starting point violates get
// an artificial. Bland's rule throughout.
class Simplex {
 public:
  Simplex(const MilpModel& m, const std::vector<Rational>& lo, const std::vector<Rational>& hi)
      : n_(m.vars.size()) {
    for (std::size_t j = 0; j < n_; ++j) add_col(lo[j], hi[j], false);
    struct Norm {
      std::vector<Rational> a;
      Rational b;
      bool eq;
    };
    std::vector<Norm> rows;
    for (const auto& r : m.rows) {
      Norm nr{std::vector<Rational>(n_, 0), r.rhs, r.rel == Relation::Eq};
      for (const auto& [v, c] : r.terms) nr.a[v] += c;
      if (r.rel == Relation::Ge) {
        for (auto& c : nr.a) c = -c;
        nr.b = -nr.b;
      }
      rows.push_back(std::move(nr));
    }
    const std::size_t mrows = rows.size();
    std::vector<std::optional<std::size_t>> slack(mrows);
    for (std::size_t i = 0; i < mrows; ++i) {
      if (!rows[i].eq) slack[i] = add_col(0, 0, true);
    }
    std::vector<Rational> resid(mrows);
    std::vector<std::optional<std::size_t>> art(mrows);
    for (std::size_t i = 0; i < mrows; ++i) {
      resid[i] = rows[i].b;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows[i].a[j] != 0) resid[i] -= rows[i].a[j] * lo[j];
      }
      if (!(slack[i] && resid[i] >= 0)) art[i] = add_col(0, 0, true);
    }
    const std::size_t ncols = lower_.size();
    tab_.assign(mrows, std::vector<Rational>(ncols, 0));
    basis_.resize(mrows);
    for (std::size_t i = 0; i < mrows; ++i) {
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = rows[i].a[j];
      if (slack[i]) tab_[i][*slack[i]] = 1;
      if (art[i]) {
        const int sign = resid[i] >= 0 ? 1 : -1;
        tab_[i][*art[i]] = sign;
        if (sign < 0) {
          for (auto& c : tab_[i]) c = -c;
        }
        basis_[i] = *art[i];
        value_[*art[i]] = abs(resid[i]);
        artificial_.push_back(*art[i]);
      } else {
        basis_[i] = *slack[i];
        value_[*slack[i]] = resid[i];
      }
    }
    for (std::size_t j = 0; j < n_; ++j) value_[j] = lo[j];
  }

  bool phase1() {
    std::vector<Rational> cost(lower_.size(), 0);
    for (std::size_t a : artificial_) cost[a] = 1;
    run(cost);
    Rational infeas = 0;
    for (std::size_t a : artificial_) infeas += value_[a];
    if (infeas > 0) return false;
    for (std::size_t a : artificial_) {
      has_upper_[a] = true;
      upper_[a] = 0;
    }
    return true;
  }

  void phase2(const LinExpr& objective) {
    std::vector<Rational> cost(lower_.size(), 0);
    for (const auto& [v, c] : objective.terms) cost[v] = c;
    run(cost);
  }

  std::vector<Rational> solution() const { return {value_.begin(), value_.begin() + n_}; }

 private:
  std::size_t add_col(const Rational& lo, const Rational& hi, bool unbounded_above) {
    lower_.push_back(lo);
    upper_.push_back(hi);
    has_upper_.push_back(!unbounded_above);
    value_.push_back(lo);
    return lower_.size() - 1;
  }

  void run(const std::vector<Rational>& cost) {
    const std::size_t ncols = lower_.size();
    const std::size_t mrows = tab_.size();
    std::vector<bool> is_basic(ncols, false);
    for (std::size_t b : basis_) is_basic[b] = true;
    std::vector<Rational> d = cost;
    for (std::size_t i = 0; i < mrows; ++i) {
      if (cost[basis_[i]] == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (tab_[i][j] != 0) d[j] -= cost[basis_[i]] * tab_[i][j];
      }
    }
    for (std::size_t iter = 0;; ++iter) {
      if (iter > kIterationCap) throw InternalError("simplex: iteration cap exceeded");
      std::size_t enter = ncols;
      int dir = 0;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (is_basic[j] || (has_upper_[j] && upper_[j] == lower_[j])) continue;
        const bool at_lower = value_[j] == lower_[j];
        if (d[j] < 0 && at_lower) {
          enter = j;
          dir = 1;
          break;
        }
        if (d[j] > 0 && !at_lower) {
          enter = j;
          dir = -1;
          break;
        }
      }
      if (enter == ncols) return;

      // Ratio test; ties go to the bound flip, then the smallest basic index.
      std::optional<Rational> step;
      if (has_upper_[enter]) step = upper_[enter] - lower_[enter];
      std::size_t leave_row = mrows;
      for (std::size_t i = 0; i < mrows; ++i) {
        const Rational& a = tab_[i][enter];
        if (a == 0) continue;
        const std::size_t b = basis_[i];
        const bool decreasing = (a > 0) == (dir > 0);
        Rational limit;
        if (decreasing) {
          limit = (value_[b] - lower_[b]) / abs(a);
        } else if (has_upper_[b]) {
          limit = (upper_[b] - value_[b]) / abs(a);
        } else {
          continue;
        }
        if (!step || limit < *step ||
            (limit == *step && leave_row != mrows && b < basis_[leave_row])) {
          step = limit;
          leave_row = i;
        }
      }
      if (!step) throw InternalError("simplex: unbounded direction in a bounded model");

      const Rational delta = dir > 0 ? *step : Rational(-*step);
      if (delta != 0) {
        value_[enter] += delta;
        for (std::size_t i = 0; i < mrows; ++i) {
          if (tab_[i][enter] != 0) value_[basis_[i]] -= tab_[i][enter] * delta;
        }
      }
      if (leave_row == mrows) continue;
      pivot(leave_row, enter, d);
      is_basic[basis_[leave_row]] = false;
      basis_[leave_row] = enter;
      is_basic[enter] = true;
    }
  }

  void pivot(std::size_t r, std::size_t c, std::vector<Rational>& d) {
    const std::size_t ncols = lower_.size();
    const Rational inv = 1 / tab_[r][c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (tab_[r][j] != 0) {
        tab_[r][j] *= inv;
        nz.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j : nz) row[j] -= f * tab_[r][j];
    };
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i != r) eliminate(tab_[i]);
    }
    eliminate(d);
  }

  static constexpr std::size_t kIterationCap = 1'000'000;

  std::size_t n_;
  std::vector<Rational> lower_, upper_, value_;
  std::vector<bool> has_upper_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> artificial_;
};

}  // namespace detail

/// LP over `m` with variable bounds replaced by lo/hi (binaries relaxed to
/// their interval). Minimizes the model objective when `optimize` is set.
inline LpResult lp_solve(const MilpModel& m, const std::vector<Rational>& lo,
                         const std::vector<Rational>& hi, bool optimize = false) {
  LpResult out;
  for (std::size_t j = 0; j < m.vars.size(); ++j) {
    if (lo[j] > hi[j]) return out;
  }
  detail::Simplex s(m, lo, hi);
  if (!s.phase1()) return out;
  if (optimize && m.objective) s.phase2(*m.objective);
  out.feasible = true;
  out.x = s.solution();
  if (m.objective) {
    out.objective = m.objective->constant;
    for (const auto& [v, c] : m.objective->terms) out.objective += c * out.x[v];
  }
  return out;
}

/// LP relaxation with the model's own bounds; minimizes the objective if any.
inline LpResult lp_feasible(const MilpModel& m) {
  std::vector<Rational> lo, hi;
  for (const auto& v : m.vars) {
    lo.push_back(v.lower);
    hi.push_back(v.upper);
  }
  return lp_solve(m, lo, hi, true);
}

}  // namespace faspkit
