// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "tcbounds/bounds.hpp"
#include "tcbounds/raag.hpp"
#include "tcbounds/tree_ball.hpp"

namespace {

using tcb::Execution;

// Complement of a perfect matching on 2m vertices: 2^m maximal cliques.
tcb::SimpleGraph cocktail_party(int m) {
  tcb::SimpleGraph g(2 * m);
  for (int a = 1; a <= 2 * m; ++a)
    for (int b = a + 1; b <= 2 * m; ++b)
      if (!(a % 2 == 1 && b == a + 1)) g.add_edge(a, b);
  return g;
}

Execution exec(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_ZNumber(benchmark::State& state) {
  const auto g = cocktail_party(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(tcb::z_number(g, exec(state)).z);
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_ZNumber)->ArgsProduct({{0, 1}, {8, 10}})->Unit(benchmark::kMillisecond);

void BM_DistanceLemma(benchmark::State& state) {
  const tcb::FreeProduct fp(tcb::Factor::free({"a"}), tcb::Factor::free({"b"}));
  const auto ball = tcb::TreeBall::build(fp, 8, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(tcb::verify_distance_lemma(fp, ball, 4, 2, exec(state)).words_checked);
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_DistanceLemma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Dichotomy(benchmark::State& state) {
  const tcb::FreeProduct fp(tcb::Factor::free({"y"}), tcb::Factor::free({"w"}));
  for (auto _ : state)
    benchmark::DoNotOptimize(tcb::check_dichotomy(fp, 6, 2, exec(state)).words);
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Dichotomy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
