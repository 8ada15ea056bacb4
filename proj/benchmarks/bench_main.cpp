#include <benchmark/benchmark.h>

#include "ncinvert/composition.hpp"
#include "ncinvert/invert.hpp"
#include "ncinvert/ncsf.hpp"
#include "ncinvert/parking.hpp"
#include "ncinvert/trees.hpp"

namespace {

void BM_SolveG(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncinvert::solve_g(order));
  }
}
BENCHMARK(BM_SolveG)->Arg(4)->Arg(6)->Arg(8);

void BM_CharQ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ncinvert::ParkingFamily family = ncinvert::ParkingFamily::classic();
  ncinvert::Caps caps;
  caps.nondecreasing = 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncinvert::char_q(family, n, caps));
  }
}
BENCHMARK(BM_CharQ)->Arg(6)->Arg(8)->Arg(10);

void BM_QuotientG(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncinvert::quotient_g(2, order));
  }
}
BENCHMARK(BM_QuotientG)->Arg(4)->Arg(6);

void BM_DeltaB(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ncinvert::Integer total(0);
    for (const ncinvert::Composition& comp : ncinvert::compositions_of(n)) {
      total += ncinvert::delta_b(comp, 1);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_DeltaB)->Arg(8)->Arg(10);

void BM_XSeriesInverse(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  ncinvert::XSeries series(order);
  series.at(0) = ncinvert::NcsfElement::unit();
  for (int n = 1; n <= order; ++n) {
    series.at(n) =
        ncinvert::NcsfElement::s_generator(n).scaled(ncinvert::Coefficient::q_power(n));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(series.inverse());
  }
}
BENCHMARK(BM_XSeriesInverse)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
