// Copyright 2026 The qecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qecc/catalog.hpp"
#include "qecc/constructions.hpp"
#include "qecc/distance.hpp"
#include "qecc/nesting.hpp"
#include "qecc/search.hpp"

namespace {

using namespace qecc;

void BM_MinDistance(benchmark::State& state, const char* id) {
  const auto code = catalog_code(id);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(code, 3, 1));
}
BENCHMARK_CAPTURE(BM_MinDistance, code513a, "code513a");
BENCHMARK_CAPTURE(BM_MinDistance, code10, "code10");
BENCHMARK_CAPTURE(BM_MinDistance, code20, "code20");

void BM_CollisionConcat(benchmark::State& state) {
  const auto code = catalog_code("concat25");
  const auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(distance_at_least_by_collision(code, t, 1));
}
BENCHMARK(BM_CollisionConcat)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Nest(benchmark::State& state) {
  const auto b = syndromes_of(catalog_fragment("code513b"));
  for (auto _ : state) benchmark::DoNotOptimize(materialize(nest(b, b)));
}
BENCHMARK(BM_Nest);

void BM_ConstructRecipe(benchmark::State& state, const char* recipe) {
  const auto id = RecipeId::parse(recipe);
  for (auto _ : state) benchmark::DoNotOptimize(construct_named(id));
}
BENCHMARK_CAPTURE(BM_ConstructRecipe, power5_3, "power5(3)");
BENCHMARK_CAPTURE(BM_ConstructRecipe, gottesman2k_6, "gottesman2k(6)");

void BM_SearchFiveQubit(benchmark::State& state) {
  SearchConstraints c;
  c.full_distance3 = c.left_rows_even_parity = c.forbid_uniform_elements = true;
  c.require_commuting = c.require_independent = true;
  SearchStrategy st;
  st.emit_limit = static_cast<std::size_t>(state.range(0));
  st.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search_codes(5, 4, c, st));
}
BENCHMARK(BM_SearchFiveQubit)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
