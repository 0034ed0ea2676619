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

#ifndef BACORE_CORE_SOLVER_HPP
#define BACORE_CORE_SOLVER_HPP

#include <map>
#include <optional>
#include <vector>

#include "bacore/game_model.hpp"

namespace bacore {

/// Payoff allocation over a finite universe, total on {1,...,n}.
struct PayoffVector {
  std::map<int, Rational> payoffs;

  Rational sum_over(const Coalition& s) const;
  Rational total() const;
};

/// A finite collection of coalitions with non-negative weights whose
/// weighted characteristic functions sum to the characteristic function of
/// `covered`, together with the weighted value sum. Proves either a
/// balancedness statement or its violation, depending on how value_sum
/// compares with the covered coalition's value.
struct BalancedCertificate {
  std::vector<Coalition> collection;
  std::vector<Rational> weights;
  Coalition covered;
  Rational value_sum;
};

/// Region-wise check of the balancing identity
/// sum_p lambda_p chi_{S_p} = chi_covered, plus weight non-negativity.
bool holds_balancing_identity(const BalancedCertificate& cert);

struct CoreDecision {
  bool non_empty = false;
  std::optional<PayoffVector> witness;       // when non_empty
  std::optional<BalancedCertificate> violation;  // when empty
};

/// d* = max sum lambda_p v(S_p) over balanced collections drawn from the
/// whole feasible family (N included, so d* >= v(N) always); the game is
/// balanced iff d* = v(N).
Rational balanced_cover_value(const Game& g);
Rational balanced_cover_value(const RestrictedGame& rg);

/// Decides core non-emptiness with a certificate either way: a payoff
/// vector satisfying efficiency and coalitional rationality exactly, or a
/// balanced collection with value_sum > v(N).
CoreDecision solve_core(const Game& g);
CoreDecision solve_core(const RestrictedGame& rg);

struct SupResult {
  enum class Kind { Value, Unbounded, Infeasible };
  Kind kind = Kind::Value;
  Rational value;  // when kind == Value
};

/// sup of sum a_i v(A_i) over non-negative weights on feasible coalitions
/// with sum a_i chi_{A_i} = chi_S (eq) resp. <= chi_S (ineq), imposed
/// region-wise. The equality form reports Infeasible when no combination
/// covers S exactly.
SupResult sup_balanced_eq(const Game& g, const Coalition& s);
SupResult sup_balanced_ineq(const Game& g, const Coalition& s);

struct BoundedBalancedResult {
  bool bounded_balanced = false;
  std::optional<Game> witness_extension;     // balanced game on the field hull
  std::optional<PayoffVector> witness;       // core element of the extension
  std::optional<BalancedCertificate> refutation;
};

/// Constructive bounded-balancedness: if the restricted core is non-empty
/// with witness a, extends v' to the field hull by v(S) = sum_{i in S} a_i
/// off A' (the witness stays in the extension's core); otherwise returns
/// the violating certificate over A'.
BoundedBalancedResult bounded_balanced_check(const RestrictedGame& rg,
                                             std::size_t hull_cap = kDefaultHullCap);

struct EpsilonReport {
  struct Stage {
    Rational eps;
    bool non_empty = false;
  };
  std::vector<Stage> stages;
  Rational cover_value;             // d*
  Rational grand_value;
  bool criterion_non_empty = false; // d* <= v(N)
  bool views_agree = false;         // each stage matches d* <= v(N) + eps
};

EpsilonReport epsilon_equivalence(const Game& g, const std::vector<Rational>& eps_list);

/// Maximizes sum lambda_p v(S_p) over balancing identities drawn from the
/// pool (N must be in the pool); returns a violating certificate iff the
/// optimum exceeds v(N).
std::optional<BalancedCertificate> balanced_violation_search(const GameRule& rule,
                                                             const SetFamily& pool);

// ---- independent certificate checks (no LP involved) ----

bool verify_core_witness(const Game& g, const PayoffVector& a);
bool verify_core_witness(const RestrictedGame& rg, const PayoffVector& a);
bool verify_violation(const Game& g, const BalancedCertificate& cert);
bool verify_violation(const RestrictedGame& rg, const BalancedCertificate& cert);
bool verify_violation(const GameRule& rule, const BalancedCertificate& cert);

}  // namespace bacore

#endif  // BACORE_CORE_SOLVER_HPP
