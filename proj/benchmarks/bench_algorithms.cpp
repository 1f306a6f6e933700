// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the forgetting algorithms on random 3-CNF.
// Arguments are (variables, clause multiplier, forgotten letters).

#include <benchmark/benchmark.h>

#include "forget/algorithm.hpp"
#include "forget/randgen.hpp"

namespace {

using forget::Algorithm;

void run(benchmark::State& state, Algorithm algorithm) {
  const auto vars = static_cast<unsigned>(state.range(0));
  const auto clauses = vars * static_cast<unsigned>(state.range(1));
  const auto k = static_cast<unsigned>(state.range(2));
  const forget::Formula f = forget::generate(vars, clauses, 7);
  const forget::VarSet forgotten = forget::letters(k);

  std::uint64_t self_time = 0;
  std::size_t output = 0;
  for (auto _ : state) {
    forget::Meter meter;
    const forget::Formula g = forget::run_forget(algorithm, f, forgotten, meter);
    benchmark::DoNotOptimize(g);
    self_time = meter.time_total();
    output = g.size();
  }
  state.counters["self_time"] = static_cast<double>(self_time);
  state.counters["out_clauses"] = static_cast<double>(output);
}

void BM_Close(benchmark::State& s) { run(s, Algorithm::Close); }
void BM_Eliminate(benchmark::State& s) { run(s, Algorithm::Eliminate); }
void BM_Linear(benchmark::State& s) { run(s, Algorithm::Linear); }
void BM_Backtrack(benchmark::State& s) { run(s, Algorithm::Backtrack); }

// Linear blows up when most letters are forgotten, so it gets small shapes.
void small_shapes(benchmark::internal::Benchmark* b) {
  b->Args({4, 2, 1})->Args({5, 2, 2})->Args({6, 2, 2});
}

void shapes(benchmark::internal::Benchmark* b) {
  small_shapes(b);
  b->Args({8, 3, 4})->Args({9, 4, 4})->Args({10, 4, 6});
}

BENCHMARK(BM_Close)->Apply(shapes);
BENCHMARK(BM_Eliminate)->Apply(shapes);
BENCHMARK(BM_Linear)->Apply(small_shapes);
BENCHMARK(BM_Backtrack)->Apply(shapes);

}  // namespace

BENCHMARK_MAIN();
