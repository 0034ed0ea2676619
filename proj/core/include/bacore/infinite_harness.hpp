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

#ifndef BACORE_INFINITE_HARNESS_HPP
#define BACORE_INFINITE_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bacore/core_solver.hpp"
#include "bacore/witness_builder.hpp"

namespace bacore {

/// Truncation ladder over the first example rule: at each stage n the exact
/// LP on the subfield generated by the singletons {1},...,{n} forces
/// mu({1,...,n}) >= H_n, which grows without bound.
struct LadderReport {
  struct Stage {
    int n = 0;
    Rational forced_bound;
    std::string lp_status;  // "optimal" or "infeasible"
    std::optional<BalancedCertificate> infeasibility;  // example 2 stages
  };
  enum class Conclusion { DivergesUnbounded, Stable, Infeasible };

  std::vector<Stage> stages;
  Conclusion conclusion = Conclusion::Stable;
  std::optional<Rational> stable_bound;
  /// Dyadic divergence certificate: H_{2^k} >= 1 + k/2, checked exactly for
  /// the largest k with 2^k <= n_max.
  int dyadic_k = 0;
  bool dyadic_certified = false;
  /// Second built-in rule only: the rule is usually described as balanced, yet its
  /// feasible pool carries a balanced collection whose value sum exceeds
  /// v'(N); the harness reports the computed violation instead of emending
  /// the example.
  std::optional<std::string> discrepancy;
};

/// Stage LP (variables: atom masses x_1..x_n and the cofinite remainder y):
///   minimize  x_1 + ... + x_n
///   subject to mu(N) = 0, mu({1}) >= 1, mu({1,k}) >= 1 + 1/k (k = 2..n),
///              mu(N \ {1,...,m}) >= -H_m (m = 1..n).
/// The optimum is H_n exactly; each stage carries a primal point and a dual
/// multiplier vector whose exact verification proves optimality.
LadderReport example1_ladder(int n_max);

/// Truncation ladder for the restricted second example: each stage's
/// constraint system mu({1}) >= 2, mu(N \ {1}) >= 0, mu(N) = 1 (plus the
/// stage's pair constraints) is infeasible; every stage returns an exact
/// Farkas-derived certificate.
LadderReport example2_ladder(int n_max);

struct CenteredProbe {
  struct Verdict {
    SetFamily family;
    bool non_empty = false;
    std::optional<DiscreteMeasure> measure;
    std::optional<BalancedCertificate> violation;
    WitnessReport report;  // when non_empty
  };
  std::vector<Verdict> verdicts;
  bool all_non_empty = true;
};

/// Runs the full subfield -> quotient -> Dirac pipeline on each family and
/// records whether a measure in the intersection of the F_S constraints
/// with norm <= R exists.
CenteredProbe centered_probe(const Game& g, const std::vector<SetFamily>& families,
                             std::optional<Rational> lower_bound = std::nullopt);
CenteredProbe centered_probe(const GameRule& rule,
                             const std::vector<SetFamily>& families,
                             std::optional<Rational> lower_bound = std::nullopt);

}  // namespace bacore

#endif  // BACORE_INFINITE_HARNESS_HPP
