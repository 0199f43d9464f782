#include <benchmark/benchmark.h>

#include "toposcope/fincat.hpp"

using namespace toposcope;
using namespace toposcope::fincat;

static void BM_SubobjectLattice(benchmark::State& state) {
  auto cat = FinCategory::walking_idempotent();
  auto rep = Presheaf::representable(cat, 0);
  auto prod = product(cat, {&rep, &rep});
  for (auto _ : state) {
    auto sub = subobject_lattice(prod.presheaf);
    benchmark::DoNotOptimize(sub.algebra.size());
  }
}
BENCHMARK(BM_SubobjectLattice);

static void BM_ClosedSieves(benchmark::State& state) {
  auto l = algebra::FinHeyting::free_boolean(2);
  auto cat = FinCategory::from_poset(l.poset());
  auto j = jkappa_topology(cat, l);
  for (auto _ : state) {
    auto cs = closed_sieves(cat, j, l.top());
    benchmark::DoNotOptimize(cs.algebra.size());
  }
}
BENCHMARK(BM_ClosedSieves);

static void BM_YonedaCheck(benchmark::State& state) {
  auto l = algebra::FinHeyting::boolean_powerset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto report = yoneda_check(l);
    benchmark::DoNotOptimize(report.preserved);
  }
}
BENCHMARK(BM_YonedaCheck)->Arg(2)->Arg(3);

static void BM_Sheafify(benchmark::State& state) {
  auto cat = FinCategory::walking_idempotent();
  auto rep = Presheaf::representable(cat, 0);
  auto j = negneg_topology(cat);
  for (auto _ : state) {
    auto sheaf = sheafify(cat, j, rep);
    benchmark::DoNotOptimize(sheaf.sheaf.carrier(0));
  }
}
BENCHMARK(BM_Sheafify);

BENCHMARK_MAIN();
