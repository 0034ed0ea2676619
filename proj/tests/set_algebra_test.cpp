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

#include <algorithm>
#include <set>

#include "bacore/set_algebra.hpp"
#include "test_helpers.hpp"

using namespace bacore;
using namespace bacore::testing;

TEST_CASE("coalition canonical form and membership") {
  PlayerUniverse u = PlayerUniverse::naturals();
  Coalition s = Coalition::of(u, {3, 1, 2, 1});
  CHECK(s.base() == std::vector<int>{1, 2, 3});
  CHECK(s.contains(2));
  CHECK(!s.contains(4));

  Coalition c = Coalition::cofinite(u, {2, 5});
  CHECK(c.contains(1));
  CHECK(!c.contains(5));
  CHECK(c.contains(1000000));
  CHECK(!c.is_empty());
  CHECK(!c.is_grand());
  CHECK(Coalition::cofinite(u, {}).is_grand());
}

TEST_CASE("complement is an involution, explicit and cofinite") {
  SUBCASE("finite universe") {
    PlayerUniverse u = PlayerUniverse::finite(6);
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      Coalition s = random_coalition(rng, u);
      CHECK(complement(complement(s)) == s);
      CHECK(set_union(s, complement(s)).is_grand());
      CHECK(set_intersect(s, complement(s)).is_empty());
    }
  }
  SUBCASE("naturals") {
    PlayerUniverse u = PlayerUniverse::naturals();
    Coalition s = Coalition::of(u, {1, 4, 9});
    Coalition c = complement(s);
    CHECK(c.kind() == SetKind::Cofinite);
    CHECK(complement(c) == s);
  }
}

TEST_CASE("union and intersection agree with membership on random triples") {
  PlayerUniverse u = PlayerUniverse::naturals();
  Rng rng(17);
  auto random_set = [&] {
    std::vector<int> base;
    for (int p = 1; p <= 8; ++p)
      if (rand_int(rng, 0, 1)) base.push_back(p);
    if (rand_int(rng, 0, 1)) return Coalition::cofinite(u, std::move(base));
    return Coalition::of(u, std::move(base));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    Coalition a = random_set(), b = random_set(), c = random_set();
    Coalition ab = set_union(a, b);
    Coalition abc = set_intersect(ab, c);
    for (int p = 1; p <= 12; ++p) {
      CHECK(ab.contains(p) == (a.contains(p) || b.contains(p)));
      CHECK(abc.contains(p) == ((a.contains(p) || b.contains(p)) && c.contains(p)));
    }
    // de Morgan
    CHECK(complement(set_union(a, b)) ==
          set_intersect(complement(a), complement(b)));
    CHECK(set_union(a, b) == set_union(b, a));
    CHECK(set_intersect(a, set_union(a, b)) == a);
  }
}

TEST_CASE("canonical order is a strict total order") {
  PlayerUniverse u = PlayerUniverse::naturals();
  std::vector<Coalition> sets = {
      Coalition::empty(u),           Coalition::of(u, {2}),
      Coalition::of(u, {1, 3}),      Coalition::cofinite(u, {}),
      Coalition::cofinite(u, {1}),   Coalition::of(u, {5}),
  };
  std::sort(sets.begin(), sets.end());
  CHECK(sets.front().is_empty());
  // every explicit set precedes every cofinite one
  bool seen_cofinite = false;
  for (const Coalition& s : sets) {
    if (s.kind() == SetKind::Cofinite) seen_cofinite = true;
    if (seen_cofinite) CHECK(s.kind() == SetKind::Cofinite);
  }
}

TEST_CASE("regions partition the universe") {
  SUBCASE("finite universe") {
    PlayerUniverse u = PlayerUniverse::finite(5);
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Coalition> gens;
      for (int j = 0; j < 3; ++j) gens.push_back(random_coalition(rng, u));
      SetFamily fam = SetFamily::of(u, gens);
      std::vector<Region> rs = regions(fam);
      // disjoint and covering: each player lies in exactly one block
      for (int p = 1; p <= 5; ++p) {
        int hits = 0;
        for (const Region& r : rs) hits += r.block.contains(p);
        CHECK(hits == 1);
      }
      // region signatures match the generators
      for (const Region& r : rs) {
        REQUIRE(r.inside.size() == fam.sets.size());
        int rep = r.block.base().empty() ? -1 : r.block.base().front();
        REQUIRE(rep != -1);
        for (std::size_t j = 0; j < fam.sets.size(); ++j)
          CHECK(r.inside[j] == fam.sets[j].contains(rep));
      }
    }
  }
  SUBCASE("naturals with a cofinite tail") {
    PlayerUniverse u = PlayerUniverse::naturals();
    SetFamily fam = SetFamily::of(
        u, {Coalition::of(u, {1}), Coalition::of(u, {1, 2}), Coalition::cofinite(u, {3})});
    std::vector<Region> rs = regions(fam);
    int cofinite_blocks = 0;
    for (const Region& r : rs) cofinite_blocks += r.block.kind() == SetKind::Cofinite;
    CHECK(cofinite_blocks == 1);
    for (int p : {1, 2, 3, 4, 100}) {
      int hits = 0;
      for (const Region& r : rs) hits += r.block.contains(p);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("is_field recognizes fields and rejects near-fields") {
  PlayerUniverse u = PlayerUniverse::finite(4);
  SetFamily power = power_set_field(u).family();
  CHECK(is_field(power));
  CHECK(power.size() == 16);

  SetFamily no_empty = SetFamily::of(u, {Coalition::grand(u), Coalition::of(u, {1})});
  CHECK(!is_field(no_empty));

  // closed under complement but not union
  SetFamily not_union_closed = SetFamily::of(
      u, {Coalition::empty(u), Coalition::grand(u), Coalition::of(u, {1}),
          Coalition::of(u, {2, 3, 4}), Coalition::of(u, {2}),
          Coalition::of(u, {1, 3, 4})});
  CHECK(!is_field(not_union_closed));
}

TEST_CASE("field hull matches the fixpoint closure oracle") {
  Rng rng(31);
  for (int n = 2; n <= 4; ++n) {
    PlayerUniverse u = PlayerUniverse::finite(n);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Coalition> gens;
      int count = rand_int(rng, 1, 4);
      for (int j = 0; j < count; ++j) gens.push_back(random_coalition(rng, u));
      SetFamily fam = SetFamily::of(u, gens);
      FieldOfSets hull = field_hull(fam);
      std::set<Coalition> oracle = closure_oracle(fam);
      std::set<Coalition> got(hull.members().begin(), hull.members().end());
      CHECK(got == oracle);
      CHECK(is_field(hull.family()));
      // atoms partition N and every member is a union of atoms
      std::size_t atom_players = 0;
      for (const Coalition& a : hull.atoms()) atom_players += a.base().size();
      CHECK(atom_players == static_cast<std::size_t>(n));
      CHECK(hull.members().size() == (std::size_t{1} << hull.atoms().size()));
    }
  }
}

TEST_CASE("field hull over the naturals keeps one cofinite atom") {
  PlayerUniverse u = PlayerUniverse::naturals();
  SetFamily fam = SetFamily::of(u, {Coalition::of(u, {1}), Coalition::of(u, {2})});
  FieldOfSets hull = field_hull(fam);
  CHECK(hull.atoms().size() == 3);  // {1}, {2}, N \ {1,2}
  CHECK(hull.members().size() == 8);
  CHECK(hull.contains(Coalition::cofinite(u, {1, 2})));
  CHECK(hull.contains(Coalition::of(u, {1, 2})));
}

TEST_CASE("hull cap is enforced") {
  PlayerUniverse u = PlayerUniverse::finite(10);
  std::vector<Coalition> singletons;
  for (int p = 1; p <= 10; ++p) singletons.push_back(Coalition::singleton(u, p));
  SetFamily fam = SetFamily::of(u, singletons);
  CHECK_THROWS_AS(field_hull(fam, 512), HullCapExceeded);
  CHECK(field_hull(fam, 1024).members().size() == 1024);
}

TEST_CASE("FieldOfSets::verify rejects non-fields") {
  PlayerUniverse u = PlayerUniverse::finite(3);
  CHECK_THROWS_AS(
      FieldOfSets::verify(SetFamily::of(u, {Coalition::grand(u)})),
      std::invalid_argument);
  FieldOfSets f = FieldOfSets::verify(SetFamily::of(
      u, {Coalition::empty(u), Coalition::grand(u), Coalition::of(u, {1}),
          Coalition::of(u, {2, 3})}));
  CHECK(f.atoms().size() == 2);
}
