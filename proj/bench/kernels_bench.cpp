/*
   Copyright 2026 The spotty Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference kernels against their OpenMP counterparts. The second
// argument of the *_omp cases is the worker count.

#include <benchmark/benchmark.h>

#include "spotty/kernels.hpp"
#include "spotty/matrix_file.hpp"

namespace {

using namespace spotty;

const GeneratorMatrix& example() {
  static const auto g = parse_matrix(R"(m=4 b=3 t=2
1 0 0   u+u2 0  0
0 u 0   u2   0  u3
0 0 u2  0    u3 0
)");
  return g;
}

// A larger span: 16^4 = 65536 codewords of length 8 over m = 4.
const GeneratorMatrix& wide() {
  static const auto g = parse_matrix(R"(m=4 b=2 t=1
1 0  0 0  u 1     1+u3 0
0 1  0 0  1 u2    0    1
0 0  1 0  1+u 0   u    1
0 0  0 1  0 1     1    u+u3
)");
  return g;
}

void BM_SpanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::span_serial(wide()));
}
void BM_SpanOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::span_omp(wide(), static_cast<unsigned>(state.range(0))));
}

void BM_DualSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::dual_tally_serial(example()));
}
void BM_DualOmp(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::dual_tally_omp(example(), static_cast<unsigned>(state.range(0))));
  }
}

void BM_DistributionSerial(benchmark::State& state) {
  const auto code = span(wide());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::distribution_serial(code));
}
void BM_DistributionOmp(benchmark::State& state) {
  const auto code = span(wide());
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::distribution_omp(code, static_cast<unsigned>(state.range(0))));
  }
}

BENCHMARK(BM_SpanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpanOmp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualSerial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_DualOmp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistributionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistributionOmp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
