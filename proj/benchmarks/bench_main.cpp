// Copyright 2026 The fatpoints Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>

#include <benchmark/benchmark.h>

#include "fatpoints/cremona.hpp"
#include "fatpoints/field_matrix.hpp"
#include "fatpoints/schemes.hpp"
#include "fatpoints/spec_text.hpp"

namespace {

using namespace fatpoints;

void BM_Rank(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  PrimeField f(32003);
  std::mt19937_64 rng(1);
  std::vector<Vector> rows(size, Vector(size));
  for (auto& r : rows)
    for (auto& x : r) x = static_cast<Residue>(rng() % 32003);
  const FieldMatrix m = FieldMatrix::from_rows(f, rows, size);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_ConditionMatrix(benchmark::State& state) {
  const SchemeSpec spec = parse_spec("L(5,4;3[15],2^14)");
  const SampledScheme s = sample(spec, 32003, 1);
  for (auto _ : state) benchmark::DoNotOptimize(condition_matrix(spec, s));
}
BENCHMARK(BM_ConditionMatrix);

void BM_Dimension(benchmark::State& state) {
  const SchemeSpec spec = parse_spec("L(4,4;2^14)");
  for (auto _ : state) benchmark::DoNotOptimize(dimension(spec));
}
BENCHMARK(BM_Dimension)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const RationalMap m = map_from_system(parse_spec("L(2,5;2^6)"),
                                        static_cast<std::uint32_t>(state.range(0)), 1);
  CensusOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(fiber_census(m, o));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(projective_point_count(m.prime, 2)));
}
BENCHMARK(BM_Census)->Arg(101)->Arg(211)->Arg(499)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
