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

#include "bacore/infinite_harness.hpp"

#include <stdexcept>

#include "bacore/exact_lp.hpp"

namespace bacore {

namespace {

// Exact primal/dual pair for the stage-n LP of the first example ladder.
// Variables: x_1..x_n (singleton masses) and y (mass of N \ {1,...,n}), all
// free. The primal point x_k = 1/k, y = -H_n is feasible with objective
// H_n; the dual multipliers (weight 1 on each pair row, n-2 on the first
// cofinite row, -(n-2) on the efficiency equality; weight 1 on the {1} row
// when n = 1) aggregate to the objective with right-hand side H_n, so H_n
// is the exact optimum. Both sides are verified by explicit summation.
Rational verified_stage_bound(int n, const std::vector<Rational>& H) {
  // primal point
  std::vector<Rational> x(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) x[static_cast<std::size_t>(k)] = rat(1, k);
  const Rational y = -H[static_cast<std::size_t>(n)];

  auto xs = [&](int from, int to) {  // sum of x_k over [from, to]
    return H[static_cast<std::size_t>(to)] - H[static_cast<std::size_t>(from - 1)];
  };

  // feasibility
  if (xs(1, n) + y != 0) throw std::logic_error("ladder: efficiency violated");
  if (x[1] < 1) throw std::logic_error("ladder: {1} constraint violated");
  for (int k = 2; k <= n; ++k)
    if (x[1] + x[static_cast<std::size_t>(k)] < 1 + rat(1, k))
      throw std::logic_error("ladder: pair constraint violated");
  for (int m = 1; m <= n; ++m)
    if (xs(m + 1, n) + y < -H[static_cast<std::size_t>(m)])
      throw std::logic_error("ladder: cofinite constraint violated");
  const Rational primal_obj = xs(1, n);

  // dual aggregation; coefficients indexed x_1..x_n then y
  std::vector<Rational> agg(static_cast<std::size_t>(n) + 2);
  Rational agg_rhs(0);
  if (n == 1) {
    agg[1] += 1;  // weight 1 on mu({1}) >= 1
    agg_rhs += 1;
  } else {
    for (int k = 2; k <= n; ++k) {  // weight 1 on each pair row
      agg[1] += 1;
      agg[static_cast<std::size_t>(k)] += 1;
      agg_rhs += 1 + rat(1, k);
    }
    const Rational w(n - 2);  // weight on mu(N \ {1}) >= -H_1
    for (int k = 2; k <= n; ++k) agg[static_cast<std::size_t>(k)] += w;
    agg[static_cast<std::size_t>(n) + 1] += w;
    agg_rhs += w * -H[1];
    const Rational we = -w;  // free multiplier on the efficiency equality
    for (int k = 1; k <= n; ++k) agg[static_cast<std::size_t>(k)] += we;
    agg[static_cast<std::size_t>(n) + 1] += we;
  }
  // all variables are free, so aggregated coefficients must match the
  // objective (1 on each x_k, 0 on y) exactly
  for (int k = 1; k <= n; ++k)
    if (agg[static_cast<std::size_t>(k)] != 1)
      throw std::logic_error("ladder: dual aggregation mismatch on x");
  if (agg[static_cast<std::size_t>(n) + 1] != 0)
    throw std::logic_error("ladder: dual aggregation mismatch on y");
  if (agg_rhs != primal_obj)
    throw std::logic_error("ladder: duality gap");
  return primal_obj;
}

}  // namespace

LadderReport example1_ladder(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<Rational> H(static_cast<std::size_t>(n_max) + 1, Rational(0));
  for (int k = 1; k <= n_max; ++k)
    H[static_cast<std::size_t>(k)] = H[static_cast<std::size_t>(k) - 1] + rat(1, k);

  LadderReport rep;
  for (int n = 1; n <= n_max; ++n) {
    LadderReport::Stage st;
    st.n = n;
    st.forced_bound = verified_stage_bound(n, H);
    st.lp_status = "optimal";
    rep.stages.push_back(std::move(st));
  }

  int k = 0;
  while ((1 << (k + 1)) <= n_max) ++k;
  rep.dyadic_k = k;
  rep.dyadic_certified = H[static_cast<std::size_t>(1 << k)] >= 1 + rat(k, 2);
  rep.conclusion = rep.dyadic_certified ? LadderReport::Conclusion::DivergesUnbounded
                                        : LadderReport::Conclusion::Stable;
  if (!rep.dyadic_certified) rep.stable_bound = rep.stages.back().forced_bound;
  return rep;
}

LadderReport example2_ladder(int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  const GameRule rule = GameRule::example2();
  const PlayerUniverse u = PlayerUniverse::naturals();

  LadderReport rep;
  for (int n = 2; n <= n_max; ++n) {
    // Variables: x_1..x_n and the tail mass y of N \ {1,...,n}.
    const std::size_t nv = static_cast<std::size_t>(n) + 1;
    LinearProgram lp;
    lp.sense = Sense::Maximize;
    lp.objective.assign(nv, Rational(0));
    lp.signs.assign(nv, VarSign::Free);

    std::vector<Coalition> row_set;
    {  // mu(N) = 1
      std::vector<Rational> row(nv, Rational(1));
      lp.add_row(std::move(row), Relation::Equal, Rational(1));
      row_set.push_back(Coalition::grand(u));
    }
    {  // mu({1}) >= 2
      std::vector<Rational> row(nv, Rational(0));
      row[0] = 1;
      lp.add_row(std::move(row), Relation::GreaterEqual, Rational(2));
      row_set.push_back(Coalition::singleton(u, 1));
    }
    for (int kk = 2; kk <= n; ++kk) {  // mu({1,k}) >= 2 + 1/k
      std::vector<Rational> row(nv, Rational(0));
      row[0] = 1;
      row[static_cast<std::size_t>(kk) - 1] = 1;
      lp.add_row(std::move(row), Relation::GreaterEqual, 2 + rat(1, kk));
      row_set.push_back(Coalition::of(u, {1, kk}));
    }
    {  // mu(N \ {1}) >= 0
      std::vector<Rational> row(nv, Rational(1));
      row[0] = 0;
      lp.add_row(std::move(row), Relation::GreaterEqual, Rational(0));
      row_set.push_back(complement(Coalition::singleton(u, 1)));
    }

    LPOutcome out = solve(lp);
    if (out.status != LPStatus::Infeasible || !verify(lp, out))
      throw std::logic_error("example 2 stage unexpectedly feasible");

    // Farkas multipliers -> balanced collection violating v'(N).
    const Rational t = -out.farkas[0];
    if (t <= 0) throw std::logic_error("degenerate Farkas multiplier on mu(N)");
    BalancedCertificate cert;
    cert.covered = Coalition::grand(u);
    cert.value_sum = 0;
    for (std::size_t i = 1; i < out.farkas.size(); ++i) {
      Rational w = out.farkas[i] / t;
      if (w == 0) continue;
      cert.collection.push_back(row_set[i]);
      cert.weights.push_back(w);
      cert.value_sum += w * rule.evaluate(row_set[i]);
    }
    if (!verify_violation(rule, cert))
      throw std::logic_error("stage certificate failed verification");

    LadderReport::Stage st;
    st.n = n;
    st.forced_bound = cert.value_sum;  // exceeds v'(N) = 1
    st.lp_status = "infeasible";
    st.infeasibility = std::move(cert);
    rep.stages.push_back(std::move(st));
  }
  rep.conclusion = LadderReport::Conclusion::Infeasible;
  rep.discrepancy =
      "the feasible pool {{1}, N\\{1}, N} is a balanced collection with "
      "weighted value 2 > v'(N) = 1, so the game fails the balancedness "
      "inequality on its own feasible family despite being described as "
      "balanced; the computed violation is reported as-is";
  return rep;
}

namespace {

template <typename Source>
CenteredProbe centered_probe_impl(const Source& src,
                                  const std::vector<SetFamily>& families,
                                  std::optional<Rational> lower_bound) {
  CenteredProbe probe;
  for (const SetFamily& fam : families) {
    CenteredProbe::Verdict v;
    v.family = fam;
    FieldOfSets sub = build_subfield(fam);
    QuotientGame q = quotient(src, sub);
    DiracWitnessResult dw = dirac_witness(q);
    if (dw.measure) {
      v.report = verify_witness(*dw.measure, src, fam, lower_bound);
      v.non_empty = v.report.pass();
      v.measure = std::move(dw.measure);
    } else {
      v.non_empty = false;
      v.violation = std::move(dw.lifted_violation);
    }
    if (!v.non_empty) probe.all_non_empty = false;
    probe.verdicts.push_back(std::move(v));
  }
  return probe;
}

}  // namespace

CenteredProbe centered_probe(const Game& g, const std::vector<SetFamily>& families,
                             std::optional<Rational> lower_bound) {
  return centered_probe_impl(g, families, lower_bound);
}

CenteredProbe centered_probe(const GameRule& rule,
                             const std::vector<SetFamily>& families,
                             std::optional<Rational> lower_bound) {
  return centered_probe_impl(rule, families, lower_bound);
}

}  // namespace bacore
