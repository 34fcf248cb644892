#include <benchmark/benchmark.h>

#include "realdcp/dowling.hpp"
#include "realdcp/poset_checks.hpp"

using namespace dcp;
using rootsys::build_root_system;
using rootsys::parse_coxeter_type;

namespace {

void BM_enumerate(benchmark::State& state, const char* type) {
  auto rs = build_root_system(parse_coxeter_type(type));
  for (auto _ : state) {
    auto p = flats::enumerate_even_poset(rs);
    benchmark::DoNotOptimize(p.size());
  }
}
BENCHMARK_CAPTURE(BM_enumerate, B4, "B4");
BENCHMARK_CAPTURE(BM_enumerate, B6, "B6");
BENCHMARK_CAPTURE(BM_enumerate, D6, "D6");
BENCHMARK_CAPTURE(BM_enumerate, A7, "A7");
BENCHMARK_CAPTURE(BM_enumerate, F4, "F4");
BENCHMARK_CAPTURE(BM_enumerate, H4, "H4");
BENCHMARK_CAPTURE(BM_enumerate, E6, "E6");

void BM_closure(benchmark::State& state) {
  auto rs = build_root_system(parse_coxeter_type("E8"));
  flats::RootGeometry g(std::make_shared<rootsys::RootSystem>(rs));
  int i = 0;
  for (auto _ : state) {
    auto f = g.closure({i % g.n(), (i * 7 + 3) % g.n(), (i * 13 + 5) % g.n()});
    benchmark::DoNotOptimize(f.rank);
    ++i;
  }
}
BENCHMARK(BM_closure);

void BM_covers(benchmark::State& state, const char* type) {
  auto rs = build_root_system(parse_coxeter_type(type));
  for (auto _ : state) {
    auto p = flats::enumerate_even_poset(rs);
    benchmark::DoNotOptimize(p.covers().size());
  }
}
BENCHMARK_CAPTURE(BM_covers, B5, "B5");
BENCHMARK_CAPTURE(BM_covers, E6, "E6");

void BM_dowling(benchmark::State& state) {
  for (auto _ : state) {
    auto p = flats::dowling_even_poset(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(p.size());
  }
}
BENCHMARK(BM_dowling)->Arg(4)->Arg(5)->Arg(6);

void BM_mobius_oracle(benchmark::State& state) {
  auto rs = build_root_system(parse_coxeter_type("B5"));
  auto p = flats::enumerate_even_poset(rs);
  for (auto _ : state) {
    auto mu = flats::mobius_oracle(p);
    benchmark::DoNotOptimize(mu.size());
  }
}
BENCHMARK(BM_mobius_oracle);

}  // namespace

BENCHMARK_MAIN();
