// Copyright 2026 The spinor_secant Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "spinor_secant/certificates.hpp"
#include "spinor_secant/random.hpp"
#include "spinor_secant/terracini.hpp"

namespace ss = spinor_secant;

static void BM_SpinorCoordinates(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ss::SkewMatrix u = ss::random_skew(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(ss::spinor_coordinates(u));
}
BENCHMARK(BM_SpinorCoordinates)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_Jacobian(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ss::SkewMatrix u = ss::random_skew(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(ss::jacobian(u));
}
BENCHMARK(BM_Jacobian)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_StackedRank(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::size_t h = static_cast<std::size_t>(state.range(0));
  std::vector<ss::DenseMatrix> blocks;
  for (int i = 0; i < 3; ++i) blocks.push_back(ss::affine_tangent_matrix(ss::random_skew(h, rng)).matrix);
  const ss::DenseMatrix stacked = ss::vstack(blocks);
  for (auto _ : state) benchmark::DoNotOptimize(ss::rank(stacked));
  state.SetLabel(std::to_string(stacked.rows()) + "x" + std::to_string(stacked.cols()));
}
BENCHMARK(BM_StackedRank)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SecantEstimate(benchmark::State& state) {
  const std::size_t h = static_cast<std::size_t>(state.range(0));
  const std::size_t k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ss::secant_dimension_estimate(h, k, 0));
}
BENCHMARK(BM_SecantEstimate)->Args({7, 3})->Args({12, 3})->Unit(benchmark::kMillisecond);

static void BM_Base12Certificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ss::base12_certificate());
}
BENCHMARK(BM_Base12Certificate)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
