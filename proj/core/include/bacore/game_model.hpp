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

#ifndef BACORE_GAME_MODEL_HPP
#define BACORE_GAME_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bacore/rational.hpp"
#include "bacore/set_algebra.hpp"

namespace bacore {

/// A TU game: a coalition valuation on a feasible family with v(empty) = 0.
/// The feasible family is either the full power set of a finite universe or
/// an explicit field of sets.
struct Game {
  PlayerUniverse universe;
  bool full_power_set = true;
  std::optional<FieldOfSets> feasible;  // set when !full_power_set
  std::map<Coalition, Rational> values;
  Rational grand_value;
  std::optional<Rational> lower_bound;

  const Rational& value(const Coalition& s) const;
  bool is_feasible(const Coalition& s) const;
  /// All feasible coalitions in canonical order. For the full power set this
  /// enumerates 2^n coalitions; n must stay small.
  std::vector<Coalition> feasible_sets() const;
};

/// A game with restricted cooperation: the feasible family need not be a
/// field, only contain the empty and grand coalitions.
struct RestrictedGame {
  PlayerUniverse universe;
  SetFamily feasible_prime;
  std::map<Coalition, Rational> values;
  Rational grand_value;
  std::optional<Rational> lower_bound;

  const Rational& value(const Coalition& s) const;
};

/// Validated construction over the full power set of a finite universe.
/// Coalitions missing from the table get value 0; a missing lower bound is
/// inferred as the minimum of the stored values (finite games are always
/// bounded below).
Game make_explicit(const PlayerUniverse& universe,
                   std::map<Coalition, Rational> table, Rational grand_value,
                   std::optional<Rational> lower_bound = std::nullopt);

/// Validated construction of a restricted game; the empty and grand
/// coalitions are inserted into the family if absent.
RestrictedGame make_restricted(const PlayerUniverse& universe, SetFamily family,
                               std::map<Coalition, Rational> table,
                               Rational grand_value,
                               std::optional<Rational> lower_bound = std::nullopt);

/// Thrown when a rule is evaluated outside its feasible family.
struct RuleDomainError : std::invalid_argument {
  explicit RuleDomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A named total (or partial) valuation rule over the naturals, exact on
/// finite/cofinite coalitions.
///
/// example1: v({1}) = 1; v({1,n}) = 1 + 1/n for n >= 2;
///           v(N \ T) = -sum_{n in T} 1/n for finite T; 0 otherwise.
///           Defined on all finite/cofinite coalitions; not bounded below.
/// example2: partial, on A' = {empty} + {{1,i}} + {N \ {1}} + {N};
///           v({1}) = 2; v({1,n}) = 2 + 1/n; v(N \ {1}) = 0; v(N) = 1.
///           Note {1} is in A' because the {1,i} case includes i = 1.
class GameRule {
 public:
  enum class Kind { Example1, Example2 };

  static GameRule example1() { return GameRule(Kind::Example1); }
  static GameRule example2() { return GameRule(Kind::Example2); }
  static GameRule by_name(const std::string& name);

  Kind kind() const { return kind_; }
  std::string name() const;
  PlayerUniverse universe() const { return PlayerUniverse::naturals(); }

  bool in_domain(const Coalition& s) const;
  Rational evaluate(const Coalition& s) const;

 private:
  explicit GameRule(Kind k) : kind_(k) {}
  Kind kind_;
};

/// Evaluates the rule on every member of the field, yielding an explicit
/// game with the restriction minimum as its lower bound.
Game restrict_to_subfield(const GameRule& rule, const FieldOfSets& field);

/// The game v_eps: grand value raised by eps > 0, all other values kept.
Game shift_epsilon(const Game& g, const Rational& eps);

struct EpsilonShift {
  Game base;
  Rational epsilon;
  Game game() const { return shift_epsilon(base, epsilon); }
};

/// Exact harmonic partial sum H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
Rational harmonic_number(int n);

}  // namespace bacore

#endif  // BACORE_GAME_MODEL_HPP
