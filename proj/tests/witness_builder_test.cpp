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

#include <doctest.h>

#include "bacore/witness_builder.hpp"
#include "test_helpers.hpp"

using namespace bacore;
using namespace bacore::testing;

TEST_CASE("constraint radius R = v(N) - 2L and the a-priori-empty flag") {
  PlayerUniverse u = PlayerUniverse::finite(3);
  SetFamily picked = SetFamily::of(u, {Coalition::of(u, {1})});
  ConstraintSet cs = constraint_set(picked, Rational(4), Rational(-1));
  CHECK(cs.radius == 6);
  CHECK(!cs.a_priori_empty);
  ConstraintSet bad = constraint_set(picked, Rational(-4), Rational(1));
  CHECK(bad.radius == -6);
  CHECK(bad.a_priori_empty);
}

TEST_CASE("build_subfield inserts empty and grand and caches atoms") {
  PlayerUniverse u = PlayerUniverse::naturals();
  SetFamily picked = SetFamily::of(u, {Coalition::of(u, {1, 2}), Coalition::of(u, {2, 3})});
  FieldOfSets field = build_subfield(picked);
  CHECK(field.contains(Coalition::empty(u)));
  CHECK(field.contains(Coalition::grand(u)));
  // atoms: {1}, {2}, {3}, N \ {1,2,3}
  CHECK(field.atoms().size() == 4);
}

TEST_CASE("quotient game values are the originals on atom unions") {
  Rng rng(89);
  Game g = random_game(rng, 4);
  PlayerUniverse u = g.universe;
  FieldOfSets field = build_subfield(
      SetFamily::of(u, {Coalition::of(u, {1, 2}), Coalition::of(u, {3})}));
  QuotientGame q = quotient(g, field);
  const int np = q.game.universe.player_count();
  CHECK(static_cast<std::size_t>(np) == field.atoms().size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << np); ++mask) {
    Coalition sq = Coalition::from_mask(q.game.universe, mask);
    Coalition lifted = Coalition::empty(u);
    for (int i = 1; i <= np; ++i)
      if (sq.contains(i)) lifted = set_union(lifted, q.atoms[static_cast<std::size_t>(i) - 1]);
    CHECK(q.game.value(sq) == g.value(lifted));
  }
}

TEST_CASE("dirac witness on a balanced game passes verify_witness") {
  Rng rng(97);
  for (int trial = 0; trial < 50; ++trial) {
    Game g = random_balanced_game(rng, rand_int(rng, 3, 6));
    PlayerUniverse u = g.universe;
    std::vector<Coalition> picked_sets;
    for (int j = 0; j < rand_int(rng, 1, 4); ++j)
      picked_sets.push_back(random_coalition(rng, u));
    SetFamily picked = SetFamily::of(u, std::move(picked_sets));
    FieldOfSets field = build_subfield(picked);
    QuotientGame q = quotient(g, field);
    DiracWitnessResult res = dirac_witness(q);
    REQUIRE(res.measure.has_value());
    WitnessReport rep = verify_witness(*res.measure, g, picked);
    CHECK(rep.grand_ok);
    CHECK(rep.coalitions_ok);
    CHECK(rep.norm_ok);
    CHECK(rep.pass());
    CHECK(rep.norm <= rep.radius);
  }
}

TEST_CASE("dirac witness places mass on atom representatives") {
  PlayerUniverse u = PlayerUniverse::naturals();
  GameRule rule = GameRule::example1();
  SetFamily picked = SetFamily::of(u, {Coalition::singleton(u, 1)});
  FieldOfSets field = build_subfield(picked);
  QuotientGame q = quotient(rule, field);
  DiracWitnessResult res = dirac_witness(q);
  REQUIRE(res.measure.has_value());
  // atoms are {1} and N \ {1}; representatives 1 and 2
  for (const auto& [point, weight] : res.measure->support)
    CHECK((point == 1 || point == 2));
  CHECK((*res.measure)(Coalition::grand(u)) == 0);
  CHECK((*res.measure)(Coalition::singleton(u, 1)) >= 1);
}

TEST_CASE("quotient violation lifts back to a verified certificate") {
  // majority game quotiented by the field generated by its three pairs is
  // itself, so the quotient core is empty and the lifted certificate must
  // hold in the original universe.
  PlayerUniverse u = PlayerUniverse::finite(3);
  std::map<Coalition, Rational> table;
  table.emplace(Coalition::of(u, {1, 2}), Rational(1));
  table.emplace(Coalition::of(u, {1, 3}), Rational(1));
  table.emplace(Coalition::of(u, {2, 3}), Rational(1));
  Game g = make_explicit(u, std::move(table), Rational(1));
  SetFamily picked = SetFamily::of(
      u, {Coalition::of(u, {1, 2}), Coalition::of(u, {1, 3}), Coalition::of(u, {2, 3})});
  QuotientGame q = quotient(g, build_subfield(picked));
  DiracWitnessResult res = dirac_witness(q);
  REQUIRE(!res.measure.has_value());
  REQUIRE(res.lifted_violation.has_value());
  CHECK(holds_balancing_identity(*res.lifted_violation));
  CHECK(verify_violation(g, *res.lifted_violation));
  CHECK(res.lifted_violation->value_sum == rat(3, 2));
}

TEST_CASE("ba_norm equals the partition-enumeration oracle") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    int n_atoms = rand_int(rng, 1, 5);
    // a partition of Finite(6) into n_atoms blocks
    PlayerUniverse u = PlayerUniverse::finite(6);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(n_atoms));
    for (int p = 1; p <= 6; ++p)
      blocks[static_cast<std::size_t>(rand_int(rng, 0, n_atoms - 1))].push_back(p);
    std::vector<Coalition> atom_sets;
    for (auto& b : blocks)
      if (!b.empty()) atom_sets.push_back(Coalition::of(u, std::move(b)));
    FieldOfSets field = FieldOfSets::from_atom_partition(u, std::move(atom_sets));

    DiscreteMeasure m;
    m.context = field;
    for (const Coalition& atom : field.atoms())
      m.support.emplace_back(atom.base().front(),
                             rat(rand_int(rng, -6, 6), rand_int(rng, 1, 4)));
    CHECK(ba_norm(m) == partition_norm_oracle(m));
  }
}

TEST_CASE("ba_norm of a single dirac measure is its absolute weight") {
  PlayerUniverse u = PlayerUniverse::naturals();
  FieldOfSets field = build_subfield(SetFamily::of(u, {Coalition::singleton(u, 3)}));
  DiscreteMeasure m;
  m.context = field;
  m.support.emplace_back(3, rat(-5, 2));
  CHECK(ba_norm(m) == rat(5, 2));
  CHECK(m(Coalition::singleton(u, 3)) == rat(-5, 2));
  CHECK(m(Coalition::cofinite(u, {3})) == 0);
}

TEST_CASE("verify_witness bound source: explicit, game, restriction") {
  Rng rng(103);
  Game g = random_balanced_game(rng, 4);
  PlayerUniverse u = g.universe;
  SetFamily picked = SetFamily::of(u, {Coalition::of(u, {1, 2})});
  QuotientGame q = quotient(g, build_subfield(picked));
  DiracWitnessResult res = dirac_witness(q);
  REQUIRE(res.measure.has_value());

  WitnessReport with_game_bound = verify_witness(*res.measure, g, picked);
  CHECK(with_game_bound.radius == g.grand_value - 2 * *g.lower_bound);

  WitnessReport with_explicit = verify_witness(*res.measure, g, picked, Rational(-100));
  CHECK(with_explicit.radius == g.grand_value + 200);
  CHECK(with_explicit.norm_ok);
}

TEST_CASE("verify_witness fails an out-of-core measure") {
  PlayerUniverse u = PlayerUniverse::finite(3);
  std::map<Coalition, Rational> table;
  table.emplace(Coalition::of(u, {1}), Rational(2));
  Game g = make_explicit(u, std::move(table), Rational(3));
  SetFamily picked = SetFamily::of(u, {Coalition::of(u, {1})});
  FieldOfSets field = build_subfield(picked);
  DiscreteMeasure m;
  m.context = field;
  m.support.emplace_back(1, Rational(1));  // mu({1}) = 1 < 2 = v({1})
  m.support.emplace_back(2, Rational(2));
  WitnessReport rep = verify_witness(m, g, picked);
  CHECK(rep.grand_ok);
  CHECK(!rep.coalitions_ok);
  CHECK(!rep.pass());
}
