#include <benchmark/benchmark.h>

#include "superracah/lab.hpp"
#include "superracah/osp.hpp"
#include "superracah/recoupling.hpp"
#include "superracah/su2.hpp"
#include "superracah/suq2.hpp"

using namespace sr;

static void BM_SixjExact(benchmark::State& state) {
  int t = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su2::sixj_twice(t, t, t, t, t, t));
}
BENCHMARK(BM_SixjExact)->Arg(4)->Arg(12)->Arg(24);

static void BM_QSixj(benchmark::State& state) {
  int t = int(state.range(0));
  for (auto _ : state) {
    suq2::QContext ctx(Rational(3, 2));
    benchmark::DoNotOptimize(ctx.q_sixj(Spin(t), Spin(t), Spin(t), Spin(t), Spin(t), Spin(t)));
  }
}
BENCHMARK(BM_QSixj)->Arg(4)->Arg(12);

static void BM_Su2SumRuleScan(benchmark::State& state) {
  auto tuples = su2::admissible_quintuples(int(state.range(0)));
  for (auto _ : state)
    for (const auto& q : tuples) benchmark::DoNotOptimize(su2::sum_rule_residual_twice(q.a, q.b, q.c, q.d, q.e));
  state.SetItemsProcessed(state.iterations() * std::int64_t(tuples.size()));
}
BENCHMARK(BM_Su2SumRuleScan)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

// Cold memo: every iteration rebuilds the P recursion tree.
static void BM_PolyPCold(benchmark::State& state) {
  int t = int(state.range(0));
  for (auto _ : state) {
    osp::clear_poly_cache();
    benchmark::DoNotOptimize(osp::poly_P_twice(t / 2, t, t));
  }
}
BENCHMARK(BM_PolyPCold)->Arg(8)->Arg(14)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_ClosureUnified(benchmark::State& state) {
  int t = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(osp::closure_unified_twice(t, t, t));
}
BENCHMARK(BM_ClosureUnified)->Arg(6)->Arg(14);

static void BM_RecouplingFamily(benchmark::State& state) {
  int t = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lab::recoupling_matrix(t, t, t, t, 60));
}
BENCHMARK(BM_RecouplingFamily)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DeltaResidual(benchmark::State& state) {
  lab::ExperimentalProvider ep(8);
  for (auto _ : state)
    benchmark::DoNotOptimize(lab::residual_delta_sum_rule(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2), ep));
}
BENCHMARK(BM_DeltaResidual)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
