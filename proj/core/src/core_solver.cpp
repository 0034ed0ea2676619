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

#include "bacore/core_solver.hpp"

#include <algorithm>

#include "bacore/exact_lp.hpp"

namespace bacore {

Rational PayoffVector::sum_over(const Coalition& s) const {
  if (s.kind() != SetKind::Explicit)
    throw std::invalid_argument("payoff sum over a cofinite coalition");
  Rational sum(0);
  for (int i : s.base()) {
    auto it = payoffs.find(i);
    if (it != payoffs.end()) sum += it->second;
  }
  return sum;
}

Rational PayoffVector::total() const {
  Rational sum(0);
  for (const auto& [i, a] : payoffs) sum += a;
  return sum;
}

namespace {

struct PoolEntry {
  Coalition set;
  Rational value;
};

// Balancing LP over a candidate pool: one non-negative weight per pool
// member, one row per region of {pool} + {covered}, right-hand side 1 on
// regions inside `covered` and 0 outside. Relation is Equal for exact
// covers, LessEqual for the inequality form of balancedness.
struct CoverProblem {
  LinearProgram lp;
  std::vector<Region> regs;
  std::vector<PoolEntry> pool;
  Coalition covered;
};

CoverProblem build_cover(const PlayerUniverse& u, std::vector<PoolEntry> pool,
                         Coalition covered, Relation rel) {
  std::vector<Coalition> sets;
  sets.reserve(pool.size() + 1);
  for (const PoolEntry& e : pool) sets.push_back(e.set);
  sets.push_back(covered);
  std::vector<Region> regs = regions(SetFamily::of(u, std::move(sets)));

  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective.reserve(pool.size());
  for (const PoolEntry& e : pool) lp.objective.push_back(e.value);
  lp.signs.assign(pool.size(), VarSign::NonNegative);
  for (const Region& r : regs) {
    std::vector<Rational> row(pool.size(), Rational(0));
    for (std::size_t p = 0; p < pool.size(); ++p)
      if (r.block.subset_of(pool[p].set)) row[p] = 1;
    lp.add_row(std::move(row), rel,
               Rational(r.block.subset_of(covered) ? 1 : 0));
  }
  return CoverProblem{std::move(lp), std::move(regs), std::move(pool),
                      std::move(covered)};
}

std::vector<PoolEntry> game_pool(const Game& g) {
  std::vector<PoolEntry> pool;
  for (const Coalition& s : g.feasible_sets()) {
    if (s.is_empty()) continue;
    pool.push_back(PoolEntry{s, g.value(s)});
  }
  return pool;
}

std::vector<PoolEntry> game_pool(const RestrictedGame& rg) {
  std::vector<PoolEntry> pool;
  for (const Coalition& s : rg.feasible_prime.sets) {
    if (s.is_empty()) continue;
    pool.push_back(PoolEntry{s, rg.value(s)});
  }
  return pool;
}

BalancedCertificate certificate_from(const CoverProblem& cp,
                                     const std::vector<Rational>& weights) {
  BalancedCertificate cert;
  cert.covered = cp.covered;
  cert.value_sum = 0;
  for (std::size_t p = 0; p < cp.pool.size(); ++p) {
    if (weights[p] == 0) continue;
    cert.collection.push_back(cp.pool[p].set);
    cert.weights.push_back(weights[p]);
    cert.value_sum += weights[p] * cp.pool[p].value;
  }
  return cert;
}

// Core witness from the balancing LP's dual: each region's multiplier is
// assigned to the least player of its block. Every feasible coalition is a
// union of regions, so coalition sums are preserved.
PayoffVector witness_from_dual(const PlayerUniverse& u, const CoverProblem& cp,
                               const std::vector<Rational>& dual) {
  PayoffVector a;
  for (int i = 1; i <= u.player_count(); ++i) a.payoffs[i] = 0;
  for (std::size_t r = 0; r < cp.regs.size(); ++r) {
    const Coalition& block = cp.regs[r].block;
    if (!block.subset_of(cp.covered)) continue;
    a.payoffs[block.base().front()] += dual[r];
  }
  return a;
}

CoreDecision decide_core(const PlayerUniverse& u, std::vector<PoolEntry> pool,
                         const Rational& grand_value) {
  CoverProblem cp =
      build_cover(u, std::move(pool), Coalition::grand(u), Relation::Equal);
  LPOutcome out = solve(cp.lp);
  if (out.status != LPStatus::Optimal || !verify(cp.lp, out))
    throw std::logic_error("balancing LP did not solve to verified optimality");

  CoreDecision d;
  if (out.objective == grand_value) {
    d.non_empty = true;
    d.witness = witness_from_dual(u, cp, out.dual);
  } else {
    d.non_empty = false;
    d.violation = certificate_from(cp, out.primal);
  }
  return d;
}

}  // namespace

bool holds_balancing_identity(const BalancedCertificate& cert) {
  if (cert.collection.size() != cert.weights.size()) return false;
  for (const Rational& w : cert.weights)
    if (w < 0) return false;
  const PlayerUniverse& u = cert.covered.universe();
  std::vector<Coalition> sets = cert.collection;
  sets.push_back(cert.covered);
  for (const Region& r : regions(SetFamily::of(u, std::move(sets)))) {
    Rational sum(0);
    for (std::size_t p = 0; p < cert.collection.size(); ++p)
      if (r.block.subset_of(cert.collection[p])) sum += cert.weights[p];
    if (sum != (r.block.subset_of(cert.covered) ? 1 : 0)) return false;
  }
  return true;
}

Rational balanced_cover_value(const Game& g) {
  CoverProblem cp = build_cover(g.universe, game_pool(g),
                                Coalition::grand(g.universe), Relation::Equal);
  LPOutcome out = solve(cp.lp);
  if (out.status != LPStatus::Optimal || !verify(cp.lp, out))
    throw std::logic_error("balancing LP did not solve to verified optimality");
  return out.objective;
}

Rational balanced_cover_value(const RestrictedGame& rg) {
  CoverProblem cp = build_cover(rg.universe, game_pool(rg),
                                Coalition::grand(rg.universe), Relation::Equal);
  LPOutcome out = solve(cp.lp);
  if (out.status != LPStatus::Optimal || !verify(cp.lp, out))
    throw std::logic_error("balancing LP did not solve to verified optimality");
  return out.objective;
}

CoreDecision solve_core(const Game& g) {
  if (!g.universe.is_finite())
    throw std::invalid_argument("solve_core requires a finite universe");
  return decide_core(g.universe, game_pool(g), g.grand_value);
}

CoreDecision solve_core(const RestrictedGame& rg) {
  if (!rg.universe.is_finite())
    throw std::invalid_argument("solve_core requires a finite universe");
  return decide_core(rg.universe, game_pool(rg), rg.grand_value);
}

namespace {

SupResult sup_balanced(const Game& g, const Coalition& s, Relation rel) {
  if (!(s.universe() == g.universe))
    throw std::invalid_argument("coalition universe mismatch");
  CoverProblem cp = build_cover(g.universe, game_pool(g), s, rel);
  LPOutcome out = solve(cp.lp);
  if (!verify(cp.lp, out)) throw std::logic_error("sup LP certificate failed");
  SupResult res;
  switch (out.status) {
    case LPStatus::Optimal:
      res.kind = SupResult::Kind::Value;
      res.value = out.objective;
      break;
    case LPStatus::Infeasible:
      res.kind = SupResult::Kind::Infeasible;
      break;
    case LPStatus::Unbounded:
      res.kind = SupResult::Kind::Unbounded;
      break;
  }
  return res;
}

}  // namespace

SupResult sup_balanced_eq(const Game& g, const Coalition& s) {
  return sup_balanced(g, s, Relation::Equal);
}

SupResult sup_balanced_ineq(const Game& g, const Coalition& s) {
  return sup_balanced(g, s, Relation::LessEqual);
}

BoundedBalancedResult bounded_balanced_check(const RestrictedGame& rg,
                                             std::size_t hull_cap) {
  BoundedBalancedResult res;
  CoreDecision d = solve_core(rg);
  if (!d.non_empty) {
    res.bounded_balanced = false;
    res.refutation = std::move(d.violation);
    return res;
  }
  const PayoffVector& a = *d.witness;
  FieldOfSets hull = field_hull(rg.feasible_prime, hull_cap);

  Game ext;
  ext.universe = rg.universe;
  ext.full_power_set = false;
  ext.feasible = hull;
  for (const Coalition& s : hull.members()) {
    auto it = rg.values.find(s);
    ext.values[s] = it != rg.values.end() ? it->second : a.sum_over(s);
  }
  ext.grand_value = rg.grand_value;
  Rational lo(0);
  for (const auto& [s, v] : ext.values)
    if (v < lo) lo = v;
  ext.lower_bound = lo;

  res.bounded_balanced = true;
  res.witness_extension = std::move(ext);
  res.witness = a;
  return res;
}

EpsilonReport epsilon_equivalence(const Game& g,
                                  const std::vector<Rational>& eps_list) {
  EpsilonReport rep;
  rep.cover_value = balanced_cover_value(g);
  rep.grand_value = g.grand_value;
  rep.criterion_non_empty = rep.cover_value <= g.grand_value;
  rep.views_agree = true;
  for (const Rational& eps : eps_list) {
    CoreDecision d = solve_core(shift_epsilon(g, eps));
    rep.stages.push_back(EpsilonReport::Stage{eps, d.non_empty});
    bool predicted = rep.cover_value <= g.grand_value + eps;
    if (predicted != d.non_empty) rep.views_agree = false;
  }
  return rep;
}

std::optional<BalancedCertificate> balanced_violation_search(
    const GameRule& rule, const SetFamily& pool) {
  const PlayerUniverse u = rule.universe();
  if (!(pool.universe == u)) throw std::invalid_argument("pool universe mismatch");
  const Coalition grand = Coalition::grand(u);
  if (!pool.contains(grand))
    throw std::invalid_argument("pool must contain the grand coalition");
  std::vector<PoolEntry> entries;
  for (const Coalition& s : pool.sets) {
    if (s.is_empty()) continue;
    entries.push_back(PoolEntry{s, rule.evaluate(s)});
  }
  const Rational grand_value = rule.evaluate(grand);
  CoverProblem cp = build_cover(u, std::move(entries), grand, Relation::Equal);
  LPOutcome out = solve(cp.lp);
  if (out.status != LPStatus::Optimal || !verify(cp.lp, out))
    throw std::logic_error("balancing LP did not solve to verified optimality");
  if (out.objective <= grand_value) return std::nullopt;
  return certificate_from(cp, out.primal);
}

bool verify_core_witness(const Game& g, const PayoffVector& a) {
  if (a.total() != g.grand_value) return false;
  for (const Coalition& s : g.feasible_sets()) {
    if (s.is_grand() || s.is_empty()) continue;
    if (a.sum_over(s) < g.value(s)) return false;
  }
  return true;
}

bool verify_core_witness(const RestrictedGame& rg, const PayoffVector& a) {
  if (a.total() != rg.grand_value) return false;
  for (const Coalition& s : rg.feasible_prime.sets) {
    if (s.is_grand() || s.is_empty()) continue;
    if (a.sum_over(s) < rg.value(s)) return false;
  }
  return true;
}

namespace {

template <typename ValueFn>
bool verify_violation_impl(const BalancedCertificate& cert,
                           const Rational& grand_value, ValueFn value_of) {
  if (!cert.covered.is_grand()) return false;
  if (!holds_balancing_identity(cert)) return false;
  Rational sum(0);
  for (std::size_t p = 0; p < cert.collection.size(); ++p)
    sum += cert.weights[p] * value_of(cert.collection[p]);
  if (sum != cert.value_sum) return false;
  return cert.value_sum > grand_value;
}

}  // namespace

bool verify_violation(const Game& g, const BalancedCertificate& cert) {
  return verify_violation_impl(cert, g.grand_value,
                               [&](const Coalition& s) { return g.value(s); });
}

bool verify_violation(const RestrictedGame& rg, const BalancedCertificate& cert) {
  for (const Coalition& s : cert.collection)
    if (!rg.feasible_prime.contains(s)) return false;
  return verify_violation_impl(cert, rg.grand_value,
                               [&](const Coalition& s) { return rg.value(s); });
}

bool verify_violation(const GameRule& rule, const BalancedCertificate& cert) {
  return verify_violation_impl(
      cert, rule.evaluate(Coalition::grand(rule.universe())),
      [&](const Coalition& s) { return rule.evaluate(s); });
}

}  // namespace bacore
