#include <benchmark/benchmark.h>

#include "toposcope/decide.hpp"
#include "toposcope/semantics.hpp"

using namespace toposcope;
using namespace toposcope::syntax;

namespace {

Theory one_atom() {
  Theory t;
  t.signature.add_atom("p");
  return t;
}

}  // namespace

static void BM_ProofSearchCorpus(benchmark::State& state) {
  Theory t = one_atom();
  auto corpus = semantics::sequent_corpus({"p"}, static_cast<int>(state.range(0)), 50, 3,
                                          FragmentTag::SubFirstOrder);
  for (auto _ : state) {
    algebra::IntuitionisticEngine engine(t);
    int proved = 0;
    for (const auto& s : corpus)
      if (engine.provable(s)) ++proved;
    benchmark::DoNotOptimize(proved);
  }
}
BENCHMARK(BM_ProofSearchCorpus)->Arg(3)->Arg(4)->Arg(5);

static void BM_KripkeRefutation(benchmark::State& state) {
  Theory t = one_atom();
  auto p = atom("p");
  Sequent lem{{}, truth(), disj({p, neg(p)})};
  for (auto _ : state) {
    algebra::IntuitionisticEngine engine(t);
    auto model = engine.refute(lem, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_KripkeRefutation)->Arg(2)->Arg(4)->Arg(6);

static void BM_RiegerNishimuraClosure(benchmark::State& state) {
  Theory t = one_atom();
  for (auto _ : state) {
    auto classes = algebra::lindenbaum_heyting_bounded(
        t, {atom("p")}, static_cast<int>(state.range(0)), 6, 64);
    benchmark::DoNotOptimize(classes.reps.size());
  }
}
BENCHMARK(BM_RiegerNishimuraClosure)->Arg(2)->Arg(3)->Arg(4);
