#include <benchmark/benchmark.h>

#include "densesf/dense_tree.hpp"
#include "densesf/generators.hpp"
#include "densesf/greedy.hpp"
#include "densesf/half_dense.hpp"
#include "densesf/oracle.hpp"
#include "densesf/packing.hpp"

namespace {

using namespace densesf;

SteinerForestInstance dense_instance(int k, int size) {
  std::vector<int> sizes(k, size);
  return gen_dense(k, sizes, 0, Rational(3, 5), /*seed=*/k * 1000 + size);
}

void BM_Greedy(benchmark::State& state) {
  auto inst = dense_instance(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto solution = solve_greedy(inst);
    benchmark::DoNotOptimize(solution);
  }
}
BENCHMARK(BM_Greedy)->Args({4, 4})->Args({8, 8})->Args({16, 16});

void BM_HalfDenseExact(benchmark::State& state) {
  std::vector<int> sizes(static_cast<int>(state.range(0)), 2);
  auto inst = gen_dense(static_cast<int>(state.range(0)), sizes, 0, Rational(1, 2), 7);
  PackingBackend backend{PackingBackendKind::Exact, 1};
  for (auto _ : state) {
    auto solution = solve_half_dense(inst, backend);
    benchmark::DoNotOptimize(solution);
  }
}
BENCHMARK(BM_HalfDenseExact)->Arg(4)->Arg(8)->Arg(12);

void BM_HalfDenseLocal(benchmark::State& state) {
  std::vector<int> sizes(static_cast<int>(state.range(0)), 2);
  auto inst = gen_dense(static_cast<int>(state.range(0)), sizes, 0, Rational(1, 2), 7);
  PackingBackend backend{PackingBackendKind::LocalSearch, 2};
  for (auto _ : state) {
    auto solution = solve_half_dense(inst, backend);
    benchmark::DoNotOptimize(solution);
  }
}
BENCHMARK(BM_HalfDenseLocal)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

void BM_Theorem1(benchmark::State& state) {
  std::vector<int> sizes(3, static_cast<int>(state.range(0)));
  auto inst = gen_dense(3, sizes, 3, Rational(3, 5), 11);
  for (auto _ : state) {
    auto solution = solve_theorem1(inst, /*epsilon=*/0.34);
    benchmark::DoNotOptimize(solution);
  }
}
BENCHMARK(BM_Theorem1)->Arg(2)->Arg(3);

void BM_OracleForest(benchmark::State& state) {
  std::vector<int> sizes(static_cast<int>(state.range(0)), 2);
  auto inst = gen_dense(static_cast<int>(state.range(0)), sizes, 2, Rational(3, 5), 3);
  OracleCaps caps;
  for (auto _ : state) {
    auto solution = oracle_steiner_forest(inst, caps);
    benchmark::DoNotOptimize(solution);
  }
}
BENCHMARK(BM_OracleForest)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
