// Copyright 2026 The bacore authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bacore/exact_lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace bacore {

namespace {

// Standard-form tableau: min c.z s.t. A z = b, z >= 0, b >= 0.
// Columns: structural (original vars split/signed + slacks), then one
// artificial per row; the artificial block starts as the identity and
// therefore always holds B^{-1}.
struct Simplex {
  std::size_t m = 0;          // rows
  std::size_t n_struct = 0;   // structural columns
  std::size_t art0 = 0;       // first artificial column
  std::vector<std::vector<Rational>> tab;  // m x (art0 + m)
  std::vector<Rational> rhs;               // m
  std::vector<Rational> cost;              // art0 + m (phase-dependent)
  std::vector<std::size_t> basis;          // m

  bool is_artificial(std::size_t col) const { return col >= art0; }

  void pivot(std::size_t prow, std::size_t pcol) {
    const Rational piv = tab[prow][pcol];
    const std::size_t w = tab[prow].size();
    for (std::size_t j = 0; j < w; ++j) tab[prow][j] /= piv;
    rhs[prow] /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == prow) continue;
      const Rational f = tab[r][pcol];
      if (f == 0) continue;
      for (std::size_t j = 0; j < w; ++j) tab[r][j] -= f * tab[prow][j];
      rhs[r] -= f * rhs[prow];
    }
    basis[prow] = pcol;
  }

  // Simplex multipliers y = c_B B^{-1}, read off the artificial block.
  std::vector<Rational> multipliers() const {
    std::vector<Rational> y(m, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb == 0) continue;
      for (std::size_t i = 0; i < m; ++i) y[i] += cb * tab[r][art0 + i];
    }
    return y;
  }

  Rational reduced_cost(std::size_t col) const {
    Rational d = cost[col];
    for (std::size_t r = 0; r < m; ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb != 0) d -= cb * tab[r][col];
    }
    return d;
  }

  Rational objective_value() const {
    Rational v(0);
    for (std::size_t r = 0; r < m; ++r) v += cost[basis[r]] * rhs[r];
    return v;
  }

  // Bland's rule over the allowed column range. Returns false when optimal,
  // sets *unbounded_col when an improving column has no blocking row.
  bool iterate(std::size_t col_limit, std::size_t* unbounded_col) {
    for (std::size_t j = 0; j < col_limit; ++j) {
      bool basic = false;
      for (std::size_t r = 0; r < m; ++r)
        if (basis[r] == j) { basic = true; break; }
      if (basic) continue;
      if (reduced_cost(j) >= 0) continue;

      // ratio test, ties by smallest basis index
      std::size_t prow = m;
      Rational best_ratio;
      for (std::size_t r = 0; r < m; ++r) {
        if (tab[r][j] <= 0) continue;
        Rational ratio = rhs[r] / tab[r][j];
        if (prow == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[prow])) {
          prow = r;
          best_ratio = ratio;
        }
      }
      if (prow == m) {
        if (unbounded_col) *unbounded_col = j;
        return false;
      }
      pivot(prow, j);
      return true;
    }
    return false;
  }
};

struct ColumnMap {
  std::size_t plus;   // structural column for +x_j
  std::size_t minus;  // column for -x_j (free vars only), or npos
};
constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

LPOutcome solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  if (lp.signs.size() != n)
    throw std::invalid_argument("objective/sign dimension mismatch");
  for (const auto& row : lp.rows)
    if (row.coeffs.size() != n)
      throw std::invalid_argument("row dimension mismatch");

  // Column layout for the standard form.
  std::vector<ColumnMap> cmap(n);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    cmap[j].plus = ncols++;
    cmap[j].minus = lp.signs[j] == VarSign::Free ? ncols++ : npos;
  }
  std::vector<std::size_t> slack_col(m, npos);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.rows[i].rel != Relation::Equal) slack_col[i] = ncols++;

  Simplex sx;
  sx.m = m;
  sx.n_struct = ncols;
  sx.art0 = ncols;
  sx.tab.assign(m, std::vector<Rational>(ncols + m, Rational(0)));
  sx.rhs.assign(m, Rational(0));
  sx.basis.resize(m);

  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    flip[i] = row.rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      sx.tab[i][cmap[j].plus] = flip[i] * row.coeffs[j];
      if (cmap[j].minus != npos) sx.tab[i][cmap[j].minus] = -flip[i] * row.coeffs[j];
    }
    if (slack_col[i] != npos) {
      int s = row.rel == Relation::LessEqual ? 1 : -1;
      sx.tab[i][slack_col[i]] = Rational(flip[i] * s);
    }
    sx.rhs[i] = flip[i] * row.rhs;
    sx.tab[i][sx.art0 + i] = 1;
    sx.basis[i] = sx.art0 + i;
  }

  // Phase 1: minimize the sum of artificials.
  sx.cost.assign(ncols + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) sx.cost[sx.art0 + i] = 1;
  std::size_t unb = npos;
  while (sx.iterate(ncols, &unb)) {
  }

  LPOutcome out;
  if (sx.objective_value() > 0) {
    // Farkas certificate from the phase-1 multipliers.
    std::vector<Rational> y = sx.multipliers();
    out.status = LPStatus::Infeasible;
    out.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.farkas[i] = flip[i] * y[i];
    return out;
  }

  // Drive artificials out of the basis where possible; rows where no
  // structural entry is nonzero are inert (0 = 0) and stay so.
  for (std::size_t r = 0; r < m; ++r) {
    if (!sx.is_artificial(sx.basis[r])) continue;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (sx.tab[r][j] != 0) {
        sx.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2.
  const bool maximize = lp.sense == Sense::Maximize;
  sx.cost.assign(ncols + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = maximize ? Rational(-lp.objective[j]) : lp.objective[j];
    sx.cost[cmap[j].plus] = c;
    if (cmap[j].minus != npos) sx.cost[cmap[j].minus] = -c;
  }
  unb = npos;
  while (sx.iterate(ncols, &unb)) {
  }

  // Current basic point mapped back to the original variables.
  auto extract_primal = [&]() {
    std::vector<Rational> zval(ncols + m, Rational(0));
    for (std::size_t r = 0; r < m; ++r) zval[sx.basis[r]] = sx.rhs[r];
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = zval[cmap[j].plus];
      if (cmap[j].minus != npos) x[j] -= zval[cmap[j].minus];
    }
    return x;
  };

  if (unb != npos) {
    out.status = LPStatus::Unbounded;
    out.primal = extract_primal();
    std::vector<Rational> zray(ncols + m, Rational(0));
    zray[unb] = 1;
    for (std::size_t r = 0; r < m; ++r)
      if (sx.tab[r][unb] != 0) zray[sx.basis[r]] = -sx.tab[r][unb];
    out.ray.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      out.ray[j] = zray[cmap[j].plus];
      if (cmap[j].minus != npos) out.ray[j] -= zray[cmap[j].minus];
    }
    return out;
  }

  out.status = LPStatus::Optimal;
  out.primal = extract_primal();
  out.objective = 0;
  for (std::size_t j = 0; j < n; ++j) out.objective += lp.objective[j] * out.primal[j];

  std::vector<Rational> y = sx.multipliers();
  out.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    out.dual[i] = maximize ? Rational(-flip[i] * y[i]) : Rational(flip[i] * y[i]);
  return out;
}

namespace {

bool verify_optimal(const LinearProgram& lp, const LPOutcome& out) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  if (out.primal.size() != n || out.dual.size() != m) return false;

  // primal feasibility
  for (std::size_t j = 0; j < n; ++j)
    if (lp.signs[j] == VarSign::NonNegative && out.primal[j] < 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[i].coeffs[j] * out.primal[j];
    const Rational& b = lp.rows[i].rhs;
    switch (lp.rows[i].rel) {
      case Relation::LessEqual: if (lhs > b) return false; break;
      case Relation::Equal: if (lhs != b) return false; break;
      case Relation::GreaterEqual: if (lhs < b) return false; break;
    }
  }

  // objective value
  Rational obj(0);
  for (std::size_t j = 0; j < n; ++j) obj += lp.objective[j] * out.primal[j];
  if (obj != out.objective) return false;

  const bool maximize = lp.sense == Sense::Maximize;

  // dual sign restrictions
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& y = out.dual[i];
    switch (lp.rows[i].rel) {
      case Relation::LessEqual:
        if (maximize ? y < 0 : y > 0) return false;
        break;
      case Relation::GreaterEqual:
        if (maximize ? y > 0 : y < 0) return false;
        break;
      case Relation::Equal:
        break;
    }
  }

  // dual feasibility per variable
  for (std::size_t j = 0; j < n; ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < m; ++i) s += out.dual[i] * lp.rows[i].coeffs[j];
    if (lp.signs[j] == VarSign::Free) {
      if (s != lp.objective[j]) return false;
    } else if (maximize) {
      if (s < lp.objective[j]) return false;
    } else {
      if (s > lp.objective[j]) return false;
    }
  }

  // strong duality
  Rational dual_obj(0);
  for (std::size_t i = 0; i < m; ++i) dual_obj += out.dual[i] * lp.rows[i].rhs;
  return dual_obj == out.objective;
}

bool verify_infeasible(const LinearProgram& lp, const LPOutcome& out) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  if (out.farkas.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& u = out.farkas[i];
    if (lp.rows[i].rel == Relation::LessEqual && u > 0) return false;
    if (lp.rows[i].rel == Relation::GreaterEqual && u < 0) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational g(0);
    for (std::size_t i = 0; i < m; ++i) g += out.farkas[i] * lp.rows[i].coeffs[j];
    if (lp.signs[j] == VarSign::Free ? g != 0 : g > 0) return false;
  }
  Rational beta(0);
  for (std::size_t i = 0; i < m; ++i) beta += out.farkas[i] * lp.rows[i].rhs;
  return beta > 0;
}

bool verify_unbounded(const LinearProgram& lp, const LPOutcome& out) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  if (out.primal.size() != n || out.ray.size() != n) return false;

  // the point is feasible
  for (std::size_t j = 0; j < n; ++j)
    if (lp.signs[j] == VarSign::NonNegative && out.primal[j] < 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[i].coeffs[j] * out.primal[j];
    const Rational& b = lp.rows[i].rhs;
    switch (lp.rows[i].rel) {
      case Relation::LessEqual: if (lhs > b) return false; break;
      case Relation::Equal: if (lhs != b) return false; break;
      case Relation::GreaterEqual: if (lhs < b) return false; break;
    }
  }
  // the ray is a feasible direction
  for (std::size_t j = 0; j < n; ++j)
    if (lp.signs[j] == VarSign::NonNegative && out.ray[j] < 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rational d(0);
    for (std::size_t j = 0; j < n; ++j) d += lp.rows[i].coeffs[j] * out.ray[j];
    switch (lp.rows[i].rel) {
      case Relation::LessEqual: if (d > 0) return false; break;
      case Relation::Equal: if (d != 0) return false; break;
      case Relation::GreaterEqual: if (d < 0) return false; break;
    }
  }
  // and it improves the objective
  Rational cd(0);
  for (std::size_t j = 0; j < n; ++j) cd += lp.objective[j] * out.ray[j];
  return lp.sense == Sense::Maximize ? cd > 0 : cd < 0;
}

}  // namespace

bool verify(const LinearProgram& lp, const LPOutcome& out) {
  if (lp.signs.size() != lp.num_vars()) return false;
  for (const auto& row : lp.rows)
    if (row.coeffs.size() != lp.num_vars()) return false;
  switch (out.status) {
    case LPStatus::Optimal: return verify_optimal(lp, out);
    case LPStatus::Infeasible: return verify_infeasible(lp, out);
    case LPStatus::Unbounded: return verify_unbounded(lp, out);
  }
  return false;
}

}  // namespace bacore
