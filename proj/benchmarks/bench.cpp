#include <benchmark/benchmark.h>

#include "ballmodal/frames.hpp"
#include "ballmodal/kripke.hpp"
#include "ballmodal/proofs.hpp"
#include "ballmodal/syntax.hpp"

using namespace ballmodal;

static void BM_CompiledEvaluate(benchmark::State& state) {
  const Frame frame = euc3();
  const CompiledFormula f(parse("<>p -> []<>p & [=]@q"), {"p", "q"});
  std::vector<Element> valuation(frame.size() * 2, Element::bottom());
  valuation[4] = Element::e1();
  std::vector<Element> scratch;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.evaluate(frame, valuation, scratch).data());
  }
}
BENCHMARK(BM_CompiledEvaluate);

static void BM_FrameValidity(benchmark::State& state) {
  const Frame frame = frame_at(3, static_cast<std::uint64_t>(state.range(0)));
  const Formula f = parse("[]p -> [][]p");
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame_validity(frame, f, kAllUltrafilters));
  }
}
BENCHMARK(BM_FrameValidity)->Arg(0)->Arg(5000)->Arg(13823);

static void BM_Correspondence(benchmark::State& state) {
  const Formula f = parse("<>@p -> []<>@p");
  for (auto _ : state) {
    benchmark::DoNotOptimize(correspondence_check(
        FrameProperty::Euclidean, f, static_cast<std::size_t>(state.range(0)),
        kAllUltrafilters));
  }
}
BENCHMARK(BM_Correspondence)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CountermodelSearch(benchmark::State& state) {
  const Formula p = Formula::var("p");
  for (auto _ : state) {
    benchmark::DoNotOptimize(countermodel_search({p}, box(p), 2, kAllUltrafilters));
  }
}
BENCHMARK(BM_CountermodelSearch);

static void BM_CheckCorpus(benchmark::State& state) {
  const auto corpus = derivation_corpus();
  for (auto _ : state) {
    for (const auto& d : corpus) benchmark::DoNotOptimize(check(d));
  }
}
BENCHMARK(BM_CheckCorpus);

static void BM_GenerateCorpus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_corpus({"p", "q"}, 4));
  }
}
BENCHMARK(BM_GenerateCorpus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
