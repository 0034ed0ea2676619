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

#include "bacore/game_model.hpp"

#include <algorithm>

namespace bacore {

const Rational& Game::value(const Coalition& s) const {
  auto it = values.find(s);
  if (it == values.end())
    throw std::invalid_argument("coalition not in game domain: " + s.to_string());
  return it->second;
}

bool Game::is_feasible(const Coalition& s) const {
  if (full_power_set)
    return s.universe() == universe && s.kind() == SetKind::Explicit;
  return feasible->contains(s);
}

std::vector<Coalition> Game::feasible_sets() const {
  if (!full_power_set) return feasible->members();
  std::vector<Coalition> out;
  const int n = universe.player_count();
  if (n > 20) throw std::logic_error("full power set enumeration capped at n = 20");
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    out.push_back(Coalition::from_mask(universe, m));
  std::sort(out.begin(), out.end());
  return out;
}

const Rational& RestrictedGame::value(const Coalition& s) const {
  auto it = values.find(s);
  if (it == values.end())
    throw std::invalid_argument("coalition not feasible: " + s.to_string());
  return it->second;
}

namespace {

void check_lower_bound(const std::map<Coalition, Rational>& values,
                       const Rational& bound) {
  for (const auto& [s, v] : values)
    if (v < bound)
      throw std::invalid_argument("value of " + s.to_string() +
                                  " is below the declared lower bound");
}

Rational min_value(const std::map<Coalition, Rational>& values) {
  Rational lo(0);  // v(empty) = 0 is always present
  for (const auto& [s, v] : values)
    if (v < lo) lo = v;
  return lo;
}

}  // namespace

Game make_explicit(const PlayerUniverse& universe,
                   std::map<Coalition, Rational> table, Rational grand_value,
                   std::optional<Rational> lower_bound) {
  if (!universe.is_finite())
    throw std::invalid_argument("make_explicit requires a finite universe");
  const Coalition empty = Coalition::empty(universe);
  const Coalition grand = Coalition::grand(universe);
  if (auto it = table.find(empty); it != table.end() && it->second != 0)
    throw std::invalid_argument("v(empty) must be 0");
  for (const auto& [s, v] : table)
    if (!(s.universe() == universe) || s.kind() != SetKind::Explicit)
      throw std::invalid_argument("table key outside the universe: " + s.to_string());
  if (auto it = table.find(grand); it != table.end() && it->second != grand_value)
    throw std::invalid_argument("table value for N conflicts with the grand value");

  const int n = universe.player_count();
  if (n > 20) throw std::invalid_argument("explicit games capped at n = 20");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Coalition s = Coalition::from_mask(universe, m);
    table.try_emplace(std::move(s), Rational(0));
  }
  table[grand] = grand_value;
  table[empty] = 0;

  Game g;
  g.universe = universe;
  g.full_power_set = true;
  g.values = std::move(table);
  g.grand_value = std::move(grand_value);
  if (lower_bound) {
    check_lower_bound(g.values, *lower_bound);
    g.lower_bound = std::move(lower_bound);
  } else {
    g.lower_bound = min_value(g.values);
  }
  return g;
}

RestrictedGame make_restricted(const PlayerUniverse& universe, SetFamily family,
                               std::map<Coalition, Rational> table,
                               Rational grand_value,
                               std::optional<Rational> lower_bound) {
  if (!(family.universe == universe))
    throw std::invalid_argument("family universe mismatch");
  std::vector<Coalition> sets = family.sets;
  sets.push_back(Coalition::empty(universe));
  sets.push_back(Coalition::grand(universe));
  family = SetFamily::of(universe, std::move(sets));

  table[Coalition::empty(universe)] = 0;
  table[Coalition::grand(universe)] = grand_value;
  for (const Coalition& s : family.sets)
    if (!table.count(s))
      throw std::invalid_argument("missing value for feasible coalition " +
                                  s.to_string());
  for (const auto& [s, v] : table)
    if (!family.contains(s))
      throw std::invalid_argument("value given for infeasible coalition " +
                                  s.to_string());

  RestrictedGame rg;
  rg.universe = universe;
  rg.feasible_prime = std::move(family);
  rg.values = std::move(table);
  rg.grand_value = std::move(grand_value);
  if (lower_bound) {
    check_lower_bound(rg.values, *lower_bound);
    rg.lower_bound = std::move(lower_bound);
  } else {
    rg.lower_bound = min_value(rg.values);
  }
  return rg;
}

GameRule GameRule::by_name(const std::string& name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  throw std::invalid_argument("unknown rule: " + name);
}

std::string GameRule::name() const {
  return kind_ == Kind::Example1 ? "example1" : "example2";
}

namespace {

bool is_pair_with_one(const Coalition& s) {
  if (s.kind() != SetKind::Explicit) return false;
  const auto& m = s.base();
  return (m.size() == 1 && m[0] == 1) || (m.size() == 2 && m[0] == 1);
}

}  // namespace

bool GameRule::in_domain(const Coalition& s) const {
  if (s.universe().is_finite()) return false;
  if (kind_ == Kind::Example1) return true;  // total on finite/cofinite sets
  // Example 2's A': empty, {1,i} (including i = 1), N \ {1}, N
  if (s.is_empty() || s.is_grand()) return true;
  if (is_pair_with_one(s)) return true;
  return s == complement(Coalition::singleton(universe(), 1));
}

Rational GameRule::evaluate(const Coalition& s) const {
  if (!in_domain(s))
    throw RuleDomainError(name() + " is not defined on " + s.to_string());
  if (kind_ == Kind::Example1) {
    if (s.kind() == SetKind::Cofinite) {
      Rational v(0);
      for (int n : s.base()) v -= rat(1, n);
      return v;
    }
    const auto& m = s.base();
    if (m.size() == 1 && m[0] == 1) return 1;
    if (m.size() == 2 && m[0] == 1) return 1 + rat(1, m[1]);
    return 0;
  }
  // Example 2
  if (s.is_empty()) return 0;
  if (s.is_grand()) return 1;
  if (s.kind() == SetKind::Cofinite) return 0;  // N \ {1}
  const auto& m = s.base();
  if (m.size() == 1) return 2;  // the literal i = 1 case: v'({1}) = 2
  return 2 + rat(1, m[1]);
}

Game restrict_to_subfield(const GameRule& rule, const FieldOfSets& field) {
  Game g;
  g.universe = field.universe();
  g.full_power_set = false;
  g.feasible = field;
  for (const Coalition& s : field.members()) g.values[s] = rule.evaluate(s);
  g.grand_value = g.values.at(Coalition::grand(g.universe));
  g.lower_bound = min_value(g.values);
  return g;
}

Game shift_epsilon(const Game& g, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
  Game out = g;
  out.grand_value += eps;
  out.values[Coalition::grand(out.universe)] = out.grand_value;
  return out;
}

Rational harmonic_number(int n) {
  Rational h(0);
  for (int k = 1; k <= n; ++k) h += rat(1, k);
  return h;
}

}  // namespace bacore
