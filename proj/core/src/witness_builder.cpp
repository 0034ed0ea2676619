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

#include "bacore/witness_builder.hpp"

#include <algorithm>

namespace bacore {

Rational DiscreteMeasure::operator()(const Coalition& s) const {
  Rational v(0);
  for (const auto& [point, weight] : support)
    if (s.contains(point)) v += weight;
  return v;
}

ConstraintSet constraint_set(const SetFamily& picked, const Rational& grand_value,
                             const Rational& lower_bound) {
  ConstraintSet cs;
  cs.picked = picked;
  cs.grand_value = grand_value;
  cs.lower_bound = lower_bound;
  cs.radius = grand_value - 2 * lower_bound;
  cs.a_priori_empty = cs.radius < 0;
  return cs;
}

FieldOfSets build_subfield(const SetFamily& picked, std::size_t cap) {
  return field_hull(picked, cap);
}

namespace {

int representative_point(const Coalition& atom) {
  if (atom.kind() == SetKind::Explicit) {
    if (atom.base().empty()) throw std::logic_error("empty atom");
    return atom.base().front();
  }
  int candidate = 1;
  for (int excluded : atom.base()) {
    if (excluded != candidate) break;
    ++candidate;
  }
  return candidate;
}

template <typename ValueFn>
QuotientGame quotient_impl(const FieldOfSets& field, ValueFn value_of) {
  const std::vector<Coalition>& atoms = field.atoms();
  const int nq = static_cast<int>(atoms.size());
  const PlayerUniverse uq = PlayerUniverse::finite(nq);

  std::map<Coalition, Rational> table;
  Rational grand;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nq); ++mask) {
    Coalition original = Coalition::empty(field.universe());
    for (int p = 0; p < nq; ++p)
      if (mask & (std::uint64_t{1} << p))
        original = set_union(original, atoms[static_cast<std::size_t>(p)]);
    Rational v = value_of(original);
    if (mask + 1 == (std::uint64_t{1} << nq)) grand = v;
    table[Coalition::from_mask(uq, mask)] = std::move(v);
  }

  QuotientGame q;
  q.game = make_explicit(uq, std::move(table), std::move(grand));
  q.atoms = atoms;
  q.field = field;
  return q;
}

}  // namespace

QuotientGame quotient(const Game& g, const FieldOfSets& field) {
  return quotient_impl(field, [&](const Coalition& s) { return g.value(s); });
}

QuotientGame quotient(const GameRule& rule, const FieldOfSets& field) {
  return quotient_impl(field, [&](const Coalition& s) { return rule.evaluate(s); });
}

DiracWitnessResult dirac_witness(const QuotientGame& q) {
  DiracWitnessResult res;
  CoreDecision d = solve_core(q.game);
  if (d.non_empty) {
    DiscreteMeasure m{{}, q.field};
    for (std::size_t p = 0; p < q.atoms.size(); ++p) {
      int point = representative_point(q.atoms[p]);
      m.support.emplace_back(point,
                             d.witness->payoffs.at(static_cast<int>(p) + 1));
    }
    res.measure = std::move(m);
    return res;
  }

  // Lift the quotient's violating collection through the atom map.
  const BalancedCertificate& qc = *d.violation;
  BalancedCertificate lifted;
  lifted.covered = Coalition::grand(q.field.universe());
  lifted.weights = qc.weights;
  lifted.value_sum = qc.value_sum;
  for (const Coalition& sq : qc.collection) {
    Coalition original = Coalition::empty(q.field.universe());
    for (int i : sq.base())
      original = set_union(original, q.atoms[static_cast<std::size_t>(i) - 1]);
    lifted.collection.push_back(std::move(original));
  }
  if (!holds_balancing_identity(lifted))
    throw std::logic_error("lifted certificate failed the balancing identity");
  res.lifted_violation = std::move(lifted);
  return res;
}

Rational ba_norm(const DiscreteMeasure& m) {
  Rational norm(0);
  for (const Coalition& atom : m.context.atoms()) norm += abs(m(atom));
  return norm;
}

namespace {

template <typename ValueFn>
WitnessReport verify_witness_impl(const DiscreteMeasure& m,
                                  const SetFamily& picked,
                                  const Rational& grand_value, ValueFn value_of,
                                  std::optional<Rational> explicit_bound,
                                  std::optional<Rational> game_bound) {
  WitnessReport rep;
  const PlayerUniverse& u = picked.universe;
  rep.grand_ok = m(Coalition::grand(u)) == grand_value;

  rep.coalitions_ok = true;
  for (const Coalition& s : picked.sets) {
    if (s.is_grand()) {
      if (m(s) != value_of(s)) rep.coalitions_ok = false;
    } else if (m(s) < value_of(s)) {
      rep.coalitions_ok = false;
    }
  }

  Rational bound;
  if (explicit_bound) {
    bound = *explicit_bound;
    rep.used_global_bound = true;
  } else if (game_bound) {
    bound = *game_bound;
    rep.used_global_bound = true;
  } else {
    // restriction minimum over the subfield the picked sets generate
    FieldOfSets sub = build_subfield(picked);
    bound = 0;
    for (const Coalition& s : sub.members()) {
      Rational v = value_of(s);
      if (v < bound) bound = v;
    }
    rep.used_global_bound = false;
  }

  rep.norm = ba_norm(m);
  rep.radius = grand_value - 2 * bound;
  rep.norm_ok = rep.norm <= rep.radius;
  return rep;
}

}  // namespace

WitnessReport verify_witness(const DiscreteMeasure& m, const Game& g,
                             const SetFamily& picked,
                             std::optional<Rational> lower_bound) {
  return verify_witness_impl(
      m, picked, g.grand_value, [&](const Coalition& s) { return g.value(s); },
      lower_bound, g.lower_bound);
}

WitnessReport verify_witness(const DiscreteMeasure& m, const GameRule& rule,
                             const SetFamily& picked,
                             std::optional<Rational> lower_bound) {
  return verify_witness_impl(
      m, picked, rule.evaluate(Coalition::grand(rule.universe())),
      [&](const Coalition& s) { return rule.evaluate(s); }, lower_bound,
      std::nullopt);
}

}  // namespace bacore
