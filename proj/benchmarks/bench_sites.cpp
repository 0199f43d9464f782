#include <benchmark/benchmark.h>

#include "toposcope/sites.hpp"

using namespace toposcope;
using namespace toposcope::syntax;

namespace {

Theory empty_theory(int atoms) {
  Theory t;
  const char* names[] = {"p", "q", "r"};
  for (int i = 0; i < atoms; ++i) t.signature.add_atom(names[i]);
  return t;
}

}  // namespace

static void BM_BuildBooleanSite(benchmark::State& state) {
  Theory t = empty_theory(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto site = sites::build_boolean_site(t);
    benchmark::DoNotOptimize(site.algebra.size());
  }
}
BENCHMARK(BM_BuildBooleanSite)->Arg(1)->Arg(2)->Arg(3);

static void BM_CompareTopologies(benchmark::State& state) {
  Theory t = empty_theory(static_cast<int>(state.range(0)));
  auto sc = sites::syncons(sites::build_boolean_site(t));
  for (auto _ : state) {
    auto result = sites::compare_topologies(sc);
    benchmark::DoNotOptimize(result.verdict);
  }
}
BENCHMARK(BM_CompareTopologies)->Arg(1)->Arg(2)->Arg(3);

static void BM_IsBooleanSite(benchmark::State& state) {
  Theory t = empty_theory(static_cast<int>(state.range(0)));
  auto sc = sites::syncons(sites::build_boolean_site(t));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sites::is_boolean_site(sc));
  }
}
BENCHMARK(BM_IsBooleanSite)->Arg(1)->Arg(2)->Arg(3);

static void BM_TsfoSequents(benchmark::State& state) {
  auto h = algebra::FinHeyting::chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto result = sites::tsfo_sequents(h);
    benchmark::DoNotOptimize(result.sequents.size());
  }
}
BENCHMARK(BM_TsfoSequents)->Arg(3)->Arg(4)->Arg(5);
