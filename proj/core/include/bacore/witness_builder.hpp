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

#ifndef BACORE_WITNESS_BUILDER_HPP
#define BACORE_WITNESS_BUILDER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bacore/core_solver.hpp"
#include "bacore/game_model.hpp"

namespace bacore {

/// Finitely supported signed measure sum_i a_i delta_{x_i}, evaluated
/// against the field it was built for.
struct DiscreteMeasure {
  std::vector<std::pair<int, Rational>> support;  // (point, weight), points distinct
  FieldOfSets context;

  Rational operator()(const Coalition& s) const;
};

/// The finite game induced on the atoms of a finite subfield:
/// v'(S') = v(union of the atoms indexed by S').
struct QuotientGame {
  Game game;                     // over Finite(n'), full power set
  std::vector<Coalition> atoms;  // atom i' of the subfield, 1-based via index+1
  FieldOfSets field;
};

/// The constraint family {F_S} data for a picked family: the norm radius
/// R = v(N) - 2L. R < 0 means the core is a priori empty.
struct ConstraintSet {
  SetFamily picked;
  Rational grand_value;
  Rational lower_bound;
  Rational radius;
  bool a_priori_empty = false;
};

ConstraintSet constraint_set(const SetFamily& picked, const Rational& grand_value,
                             const Rational& lower_bound);

/// Field hull of the picked sets (empty and grand inserted), atoms cached.
FieldOfSets build_subfield(const SetFamily& picked,
                           std::size_t cap = kDefaultHullCap);

QuotientGame quotient(const Game& g, const FieldOfSets& field);
QuotientGame quotient(const GameRule& rule, const FieldOfSets& field);

/// Either a Dirac-combination measure solving the subfield system, or the
/// quotient's violating certificate lifted back to the original universe.
struct DiracWitnessResult {
  std::optional<DiscreteMeasure> measure;
  std::optional<BalancedCertificate> lifted_violation;
};

/// Solves the quotient core; on success places the quotient payoffs on the
/// canonical representative of each atom (its least element). On failure
/// lifts the violating collection through the atom map and re-verifies the
/// balancing identity in the original universe.
DiracWitnessResult dirac_witness(const QuotientGame& q);

/// Total-variation norm of the measure: the sup over finite partitions of N
/// in the context field, attained by the atom partition.
Rational ba_norm(const DiscreteMeasure& m);

struct WitnessReport {
  bool grand_ok = false;       // mu(N) = v(N)
  bool coalitions_ok = false;  // mu(S_j) >= v(S_j) for all picked S_j
  bool norm_ok = false;        // ||mu|| <= v(N) - 2L
  Rational norm;
  Rational radius;
  bool used_global_bound = false;  // L came from the game, not the restriction
  bool pass() const { return grand_ok && coalitions_ok && norm_ok; }
};

/// Exact check of the three witness conditions. L is the explicit bound if
/// given, else the game's declared bound, else the restriction minimum over
/// the picked sets' subfield.
WitnessReport verify_witness(const DiscreteMeasure& m, const Game& g,
                             const SetFamily& picked,
                             std::optional<Rational> lower_bound = std::nullopt);
WitnessReport verify_witness(const DiscreteMeasure& m, const GameRule& rule,
                             const SetFamily& picked,
                             std::optional<Rational> lower_bound = std::nullopt);

}  // namespace bacore

#endif  // BACORE_WITNESS_BUILDER_HPP
