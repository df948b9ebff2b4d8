/*
 * Copyright 2026 The permsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "permsum/search.hpp"
#include "permsum/verify.hpp"

using namespace permsum;

static void BM_BuildFullGraph(benchmark::State& state) {
  const Modulus m = factorize(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_compat_graph(m, Property::P1));
  }
}
BENCHMARK(BM_BuildFullGraph)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_BuildNeighborhood(benchmark::State& state) {
  const Modulus m = factorize(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_compat_graph(m, Property::P1, GraphScope::IdentityNeighborhood));
  }
}
BENCHMARK(BM_BuildNeighborhood)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_MaxClique(benchmark::State& state) {
  const Quantity q = static_cast<Quantity>(state.range(1));
  const auto g = build_compat_graph(factorize(static_cast<std::uint32_t>(state.range(0))),
                                    property_of(q), GraphScope::IdentityNeighborhood);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_max_clique(g));
  }
  state.counters["vertices"] = static_cast<double>(g.size());
}
BENCHMARK(BM_MaxClique)
    ->Args({5, static_cast<int>(Quantity::T)})
    ->Args({7, static_cast<int>(Quantity::S)})
    ->Args({7, static_cast<int>(Quantity::F)})
    ->Unit(benchmark::kMillisecond);

static void BM_VerifyFamily(benchmark::State& state) {
  const Family base = construct_p1(factorize(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) {
    Family f = base;
    benchmark::DoNotOptimize(verify_family(f, static_cast<unsigned>(state.range(1))));
  }
  state.SetItemsProcessed(state.iterations() * base.size() * (base.size() - 1) / 2);
}
BENCHMARK(BM_VerifyFamily)->Args({21, 1})->Args({21, 4})->Args({105, 1});

static void BM_CanonicalForm(benchmark::State& state) {
  const Modulus m = factorize(static_cast<std::uint32_t>(state.range(0)));
  const Perm p = construct_p2(factorize(9)).members().back();
  const Perm q = m.n() == 9 ? p : Perm::identity(m.n());
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(q, m));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(9)->Arg(21);

static void BM_EquivalenceClasses(benchmark::State& state) {
  const Modulus m = factorize(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(equivalence_classes(m));
  }
}
BENCHMARK(BM_EquivalenceClasses)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
