#include <benchmark/benchmark.h>

#include "realdcp/class_fn.hpp"
#include "realdcp/graded_ch.hpp"
#include "realdcp/series.hpp"

using namespace dcp;
using namespace dcp::symfunc;

namespace {

void BM_arcsinh(benchmark::State& state) {
  for (auto _ : state) {
    auto a = Arcsinh(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(a.terms().size());
  }
}
BENCHMARK(BM_arcsinh)->Arg(8)->Arg(12)->Arg(15);

void BM_pleth_exp_b(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  SymA as = Arcsinh(N).tilde();
  for (auto _ : state) {
    auto e = pleth_exp_b(as);
    benchmark::DoNotOptimize(e.terms().size());
  }
}
BENCHMARK(BM_pleth_exp_b)->Arg(6)->Arg(8);

void BM_type_b_graded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = charcalc::type_b_graded_ch(n);
    benchmark::DoNotOptimize(g.dims());
  }
}
BENCHMARK(BM_type_b_graded)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_euler_character(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto e = charcalc::euler_character_b(n);
    benchmark::DoNotOptimize(e.values.size());
  }
}
BENCHMARK(BM_euler_character)->Arg(5)->Arg(6);

}  // namespace
