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

#include <benchmark/benchmark.h>

#include <random>

#include "bacore/core_solver.hpp"
#include "bacore/infinite_harness.hpp"
#include "bacore/witness_builder.hpp"

namespace {

using namespace bacore;

Game random_game(std::mt19937_64& rng, int n) {
  PlayerUniverse u = PlayerUniverse::finite(n);
  std::uniform_int_distribution<int> dist(-5, 5);
  std::map<Coalition, Rational> table;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask)
    table.emplace(Coalition::from_mask(u, mask), Rational(dist(rng)));
  return make_explicit(u, std::move(table), Rational(dist(rng)));
}

void BM_SolveCore(benchmark::State& state) {
  std::mt19937_64 rng(7);
  Game g = random_game(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CoreDecision d = solve_core(g);
    benchmark::DoNotOptimize(d.non_empty);
  }
}
BENCHMARK(BM_SolveCore)->Arg(4)->Arg(6)->Arg(8);

void BM_FieldHull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PlayerUniverse u = PlayerUniverse::finite(12);
  std::vector<Coalition> gens;
  for (int p = 1; p <= n; ++p) gens.push_back(Coalition::singleton(u, p));
  SetFamily fam = SetFamily::of(u, gens);
  for (auto _ : state) {
    FieldOfSets hull = field_hull(fam);
    benchmark::DoNotOptimize(hull.members().size());
  }
}
BENCHMARK(BM_FieldHull)->Arg(4)->Arg(8)->Arg(10);

void BM_BaNorm(benchmark::State& state) {
  PlayerUniverse u = PlayerUniverse::naturals();
  std::vector<Coalition> gens;
  for (int p = 1; p <= 8; ++p) gens.push_back(Coalition::singleton(u, p));
  FieldOfSets field = build_subfield(SetFamily::of(u, gens));
  DiscreteMeasure m;
  m.context = field;
  for (int p = 1; p <= 8; ++p)
    m.support.emplace_back(p, rat(p % 2 == 0 ? -p : p, p + 1));
  for (auto _ : state) {
    Rational norm = ba_norm(m);
    benchmark::DoNotOptimize(norm);
  }
}
BENCHMARK(BM_BaNorm);

void BM_LadderStages(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LadderReport rep = example1_ladder(n);
    benchmark::DoNotOptimize(rep.stages.back().forced_bound);
  }
}
BENCHMARK(BM_LadderStages)->Arg(64)->Arg(256);

void BM_DiracPipeline(benchmark::State& state) {
  std::mt19937_64 rng(13);
  Game g = random_game(rng, 8);
  PlayerUniverse u = g.universe;
  SetFamily picked = SetFamily::of(
      u, {Coalition::of(u, {1, 2, 3}), Coalition::of(u, {3, 4}), Coalition::of(u, {5})});
  for (auto _ : state) {
    QuotientGame q = quotient(g, build_subfield(picked));
    DiracWitnessResult res = dirac_witness(q);
    benchmark::DoNotOptimize(res.measure.has_value());
  }
}
BENCHMARK(BM_DiracPipeline);

}  // namespace

BENCHMARK_MAIN();
