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

#ifndef BACORE_EXACT_LP_HPP
#define BACORE_EXACT_LP_HPP

#include <vector>

#include "bacore/rational.hpp"

namespace bacore {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class VarSign { Free, NonNegative };

struct LinearProgram {
  struct Row {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEqual;
    Rational rhs;
  };

  Sense sense = Sense::Maximize;
  std::vector<Rational> objective;
  std::vector<VarSign> signs;
  std::vector<Row> rows;

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }
  void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    rows.push_back(Row{std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Result of an exact solve. Every status carries the certificate that
/// proves it:
///  - Optimal:   primal + dual solutions with equal objective values;
///  - Infeasible: a Farkas multiplier vector over the rows;
///  - Unbounded:  a feasible point and an improving feasible direction.
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> primal;
  std::vector<Rational> dual;    // one multiplier per row
  Rational objective;
  std::vector<Rational> farkas;  // one multiplier per row
  std::vector<Rational> ray;     // one entry per variable
};

/// Two-phase exact simplex with Bland's rule. Deterministic: identical
/// input yields a bit-identical outcome.
LPOutcome solve(const LinearProgram& lp);

/// Independently re-checks every arithmetic identity the outcome claims,
/// without consulting solver internals.
///
/// Conventions checked: for Optimal, dual multipliers are >= 0 on <= rows
/// and <= 0 on >= rows under Maximize (flipped under Minimize), dual
/// feasibility holds per variable sign, and the objective values match.
/// For Infeasible, the Farkas multipliers are >= 0 on >= rows and <= 0 on
/// <= rows, the aggregated row is <= 0 on non-negative variables and = 0 on
/// free ones, and the aggregated right-hand side is > 0.
bool verify(const LinearProgram& lp, const LPOutcome& out);

}  // namespace bacore

#endif  // BACORE_EXACT_LP_HPP
